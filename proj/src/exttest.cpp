#include "holext/exttest.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "holext/errors.hpp"

namespace holext {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::string_view to_string(Classification c) noexcept {
  switch (c) {
    case Classification::InA: return "in A";
    case Classification::NotInA: return "not in A";
    case Classification::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Verdict judge(double residual, double scale, double tol, double floor) {
  if (!std::isfinite(residual)) return Verdict::Fail;
  const double bound = std::max(tol * scale, floor);
  if (residual <= bound) return Verdict::Pass;
  if (residual <= kInconclusiveFactor * bound) return Verdict::Inconclusive;
  return Verdict::Fail;
}

double bound_ratio(double residual, double scale, double tol, double floor) {
  const double bound = std::max(tol * scale, floor);
  return bound > 0.0 ? residual / bound : (residual > 0.0 ? INFINITY : 0.0);
}

Verdict combine(std::span<const Verdict> verdicts) {
  Verdict out = Verdict::Pass;
  for (Verdict v : verdicts) {
    if (v == Verdict::Fail) return Verdict::Fail;
    if (v == Verdict::Inconclusive) out = Verdict::Inconclusive;
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

double max_abs(std::span<const cplx> v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, std::abs(x));
  return m;
}

std::vector<cplx> restriction_samples(const BoundaryFunction& f, const SphereCircle& circle, std::size_t n) {
  std::vector<cplx> g;
  g.reserve(n);
  for (const auto& s : sample_circle(circle, n)) {
    const cplx v = f.evaluate(s.z);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw Error(ErrorCode::NonFiniteSample, "non-finite boundary value on the circle");
    g.push_back(v);
  }
  return g;
}

}  // namespace

MomentReport negative_frequency_test(std::span<const cplx> samples, double tol, std::string line_id) {
  const std::size_t n = samples.size();
  if (n < 16 || !is_power_of_two(n))
    throw Error(ErrorCode::InvalidArgument, "sample count must be a power of two >= 16");
  const auto coeffs = dft_coefficients(samples);
  MomentReport rep;
  rep.line_id = std::move(line_id);
  rep.n_samples = n;
  rep.tol = tol;
  rep.scale = max_abs(samples);
  const std::size_t k_max = n / 4;
  rep.residuals.resize(k_max);
  for (std::size_t m = 1; m <= k_max; ++m) {
    rep.residuals[m - 1] = std::abs(coefficient_at(coeffs, -static_cast<long>(m)));
    rep.residual = std::max(rep.residual, rep.residuals[m - 1]);
  }
  rep.verdict = judge(rep.residual, rep.scale, tol);
  return rep;
}

MomentReport holomorphic_extension_test(const BoundaryFunction& f, const ComplexLine& line, std::size_t n_samples,
                                        double tol, std::string line_id) {
  if (n_samples < 64) throw Error(ErrorCode::InvalidArgument, "holomorphic extension test needs N >= 64");
  const SphereCircle circle = sphere_intersection(line);
  return negative_frequency_test(restriction_samples(f, circle, n_samples), tol, std::move(line_id));
}

cplx moment_integral(const BoundaryFunction& f, const ComplexLine& line, cplx t, std::size_t n_samples) {
  const SphereCircle circle = sphere_intersection(line);
  if (std::abs(t - circle.center) < circle.radius + 0.1)
    throw Error(ErrorCode::PoleTooClose, "moment pole must satisfy |t - zeta0| >= rho + 0.1");
  const auto samples = sample_circle(circle, n_samples);
  cplx sum = 0.0;
  for (const auto& s : samples) {
    // d zeta = i rho e^{i theta} d theta; the 1/i cancels against the i.
    const cplx v = f.evaluate(s.z);
    sum += v * (s.zeta - circle.center) / (s.zeta - t);
  }
  return sum / static_cast<double>(n_samples);
}

MomentSweep moment_sweep(const BoundaryFunction& f, const ComplexLine& line, std::size_t count,
                         std::size_t n_samples, double tol) {
  const SphereCircle circle = sphere_intersection(line);
  MomentSweep sweep;
  sweep.tol = tol;
  sweep.scale = max_abs(restriction_samples(f, circle, n_samples));
  for (std::size_t j = 0; j < count; ++j) {
    const double angle = 2.0 * std::numbers::pi * (static_cast<double>(j) + 0.5) / static_cast<double>(count);
    const cplx t = circle.center + (circle.radius + 0.5) * std::polar(1.0, angle);
    const cplx value = moment_integral(f, line, t, n_samples);
    sweep.t.push_back(t);
    sweep.values.push_back(value);
    sweep.residual = std::max(sweep.residual, std::abs(value));
  }
  sweep.verdict = judge(sweep.residual, sweep.scale, tol);
  return sweep;
}

// ---------------------------------------------------------------------------

PoleTestReport meromorphic_extension_test(const HyperbolicCircle& circle, std::span<const cplx> samples,
                                          int pole_bound, double tol, double noise_floor) {
  const std::size_t n = samples.size();
  if (n < 16 || !is_power_of_two(n))
    throw Error(ErrorCode::InvalidArgument, "circle sample count must be a power of two >= 16");
  if (pole_bound < 0) throw Error(ErrorCode::InvalidArgument, "pole order bound must be nonnegative");
  const cplx a = circle.center();
  if (std::abs(a - circle.euclidean_center()) >= circle.euclidean_radius() * (1.0 - 1e-9))
    throw Error(ErrorCode::CenterOnCircle, "hyperbolic center is not inside the circle");

  const std::size_t k_max = n / 4;
  const auto coeffs = dft_coefficients(samples);
  Eigen::VectorXcd target(static_cast<Eigen::Index>(k_max));
  for (std::size_t m = 1; m <= k_max; ++m)
    target(static_cast<Eigen::Index>(m - 1)) = coefficient_at(coeffs, -static_cast<long>(m));

  double residual = target.norm();
  if (pole_bound > 0 && residual > 0.0) {
    const auto w = circle.sample(n);
    Eigen::MatrixXcd basis(static_cast<Eigen::Index>(k_max), pole_bound);
    std::vector<cplx> col(n);
    for (int j = 1; j <= pole_bound; ++j) {
      for (std::size_t k = 0; k < n; ++k) col[k] = std::pow(w[k] - a, -j);
      const auto bc = dft_coefficients(col);
      for (std::size_t m = 1; m <= k_max; ++m)
        basis(static_cast<Eigen::Index>(m - 1), j - 1) = coefficient_at(bc, -static_cast<long>(m));
    }
    for (int j = 0; j < pole_bound; ++j) basis.col(j).normalize();
    const Eigen::VectorXcd c = basis.colPivHouseholderQr().solve(target);
    residual = std::min(residual, (target - basis * c).norm());
  }

  PoleTestReport rep{circle, pole_bound, n, residual, max_abs(samples), noise_floor, tol, Verdict::Pass};
  rep.verdict = judge(rep.residual, rep.scale, tol, noise_floor);
  return rep;
}

PoleTestReport meromorphic_extension_test(const HyperbolicCircle& circle, const std::function<cplx(cplx)>& F,
                                          std::size_t n_samples, int pole_bound, double tol) {
  const auto w = circle.sample(n_samples);
  std::vector<cplx> values(n_samples);
  for (std::size_t k = 0; k < n_samples; ++k) values[k] = F(w[k]);
  return meromorphic_extension_test(circle, values, pole_bound, tol);
}

// ---------------------------------------------------------------------------

DiscHolomorphyReport disc_holomorphy_test(std::span<const double> radii, std::span<const std::vector<cplx>> rings,
                                          double tol, double noise_floor) {
  if (radii.empty() || radii.size() != rings.size())
    throw Error(ErrorCode::InvalidArgument, "one ring of samples per radius is required");
  const std::size_t n = rings.front().size();
  for (const auto& ring : rings) {
    if (ring.size() != n) throw Error(ErrorCode::InvalidArgument, "rings must share the angular grid");
  }
  if (n < 16 || !is_power_of_two(n))
    throw Error(ErrorCode::InvalidArgument, "ring sample count must be a power of two >= 16");
  const std::size_t outer =
      static_cast<std::size_t>(std::distance(radii.begin(), std::max_element(radii.begin(), radii.end())));
  const double r_outer = radii[outer];

  std::vector<std::vector<cplx>> coeffs;
  coeffs.reserve(rings.size());
  DiscHolomorphyReport rep;
  rep.noise_floor = noise_floor;
  for (const auto& ring : rings) {
    coeffs.push_back(dft_coefficients(ring));
    rep.scale = std::max(rep.scale, max_abs(ring));
  }
  const std::size_t k_max = n / 4;
  for (const auto& c : coeffs) {
    for (std::size_t m = 1; m <= k_max; ++m)
      rep.negative_residual = std::max(rep.negative_residual, std::abs(coefficient_at(c, -static_cast<long>(m))));
  }
  for (std::size_t i = 0; i < rings.size(); ++i) {
    if (i == outer) continue;
    const double ratio = radii[i] / r_outer;
    double damp = 1.0;
    for (std::size_t mu = 0; mu < n / 2; ++mu) {
      const cplx predicted = coeffs[outer][mu] * damp;
      rep.radial_residual = std::max(rep.radial_residual, std::abs(coeffs[i][mu] - predicted));
      damp *= ratio;
    }
  }
  rep.residual = std::max(rep.negative_residual, rep.radial_residual);
  rep.verdict = judge(rep.residual, rep.scale, tol, noise_floor);
  return rep;
}

// ---------------------------------------------------------------------------

BunchSummary bunch_test(const BoundaryFunction& f, const CPoint& a, std::size_t lines, std::size_t n_samples,
                        double tol, std::uint64_t seed) {
  if (a.dim() != f.dim()) throw Error(ErrorCode::DimensionMismatch, "point and function dimensions differ");
  if (a.norm() > 1.0 + 1e-12) throw Error(ErrorCode::InvalidArgument, "bunch point must lie in the closed ball");
  if (lines < 1) throw Error(ErrorCode::InvalidArgument, "bunch test needs at least one line");
  BunchSummary out;
  out.point = a;
  out.requested = lines;
  out.n_samples = n_samples;
  Rng rng(seed);
  std::vector<Verdict> verdicts;
  for (std::size_t i = 0; i < lines; ++i) {
    const CPoint d = random_unit_vector(a.dim(), rng);
    if (a.dim() == 2 && std::abs(d[0]) < 1e-12) {
      ++out.skipped_vertical;
      continue;
    }
    const ComplexLine line(a, d);
    try {
      (void)sphere_intersection(line);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::TangentLine && e.code() != ErrorCode::LineMissesBall) throw;
      ++out.skipped_tangent;
      continue;
    }
    auto rep = holomorphic_extension_test(f, line, n_samples, tol, "line-" + std::to_string(i));
    out.worst_residual = std::max(out.worst_residual, rep.relative_residual());
    verdicts.push_back(rep.verdict);
    out.reports.push_back(std::move(rep));
    ++out.tested;
  }
  out.verdict = combine(verdicts);
  return out;
}

// ---------------------------------------------------------------------------

std::optional<unsigned> z2_bandwidth(const BoundaryFunction& f) {
  const MonomialSum* m = f.as_monomials();
  if (m == nullptr || m->dim() != 2) return std::nullopt;
  unsigned band = 0;
  for (const auto& t : m->terms()) {
    const int charge = static_cast<int>(t.alpha[1]) - static_cast<int>(t.beta[1]);
    band = std::max(band, static_cast<unsigned>(std::abs(charge)));
  }
  return band;
}

std::size_t choose_n_phi(const BoundaryFunction& f, int max_nu, std::size_t fallback, double offset) {
  const auto v = static_cast<std::size_t>(std::abs(max_nu));
  const std::size_t minimum = next_power_of_two(4 * (v + 1));
  const auto band = z2_bandwidth(f);
  if (offset <= 1e-14) {
    if (band) return std::max(minimum, next_power_of_two(v + *band + 1));
    return std::max(minimum, fallback);
  }
  // After normalization the z2 spectrum decays like m^deg * offset^m.
  if (const MonomialSum* m = f.as_monomials()) {
    const double deg = m->degree();
    const double tail = std::ceil((40.0 + 3.0 * deg) / -std::log(offset));
    const auto needed = v + static_cast<std::size_t>(deg) + 1 + static_cast<std::size_t>(std::min(tail, 16384.0));
    return std::min<std::size_t>(16384, std::max(minimum, next_power_of_two(needed)));
  }
  const double tail = std::ceil(60.0 / -std::log(offset));
  return std::min<std::size_t>(
      16384, std::max({minimum, fallback, next_power_of_two(v + 1 + static_cast<std::size_t>(std::min(tail, 16384.0)))}));
}

const SliceVerdict& ClassificationReport::slice(int nu) const {
  for (const auto& s : slices) {
    if (s.nu == nu) return s;
  }
  throw Error(ErrorCode::InvalidArgument, "no slice verdict for nu = " + std::to_string(nu));
}

namespace {

constexpr double kNoiseUnit = 1e-13;

struct NormalizedProblem {
  BoundaryFunction g;
  cplx a1;
  cplx b1;
  bool normalized;
  double offset;
};

NormalizedProblem normalize(const BoundaryFunction& f, const CPoint& a, const CPoint& b) {
  if (std::abs(a[1]) <= 1e-14 && std::abs(b[1]) <= 1e-14) return {f, a[0], b[0], false, 0.0};
  const ComplexLine line = line_through_points(a, b);
  try {
    AxisNormalization norm(line);
    const CPoint an = norm.apply(a);
    const CPoint bn = norm.apply(b);
    if (std::abs(an[1]) > 1e-9 || std::abs(bn[1]) > 1e-9 || std::abs(an[0]) > 1.0 + 1e-9 ||
        std::abs(bn[0]) > 1.0 + 1e-9)
      throw Error(ErrorCode::NormalizationFailed, "normalized points left the axis {z2 = 0}");
    BoundaryFunction g(BlackBoxSampler{[f, norm](const CPoint& w) { return f.evaluate(norm.invert(w)); }, 2},
                       f.smoothness(), f.label() + " (normalized)");
    return {std::move(g), an[0], bn[0], true, norm.offset()};
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NormalizationFailed) throw;
    throw Error(ErrorCode::NormalizationFailed, e.what());
  }
}

double sample_scale(const BoundaryFunction& g, const GridSpec& grid) {
  double m = 0.0;
  for (double r : grid.radii()) {
    const double r2 = std::sqrt(1.0 - r * r);
    for (double t : grid.angles()) {
      for (int p = 0; p < 8; ++p) {
        const CPoint z{std::polar(r, t), std::polar(r2, 2.0 * std::numbers::pi * p / 8.0 + 0.3)};
        m = std::max(m, std::abs(g.evaluate(z)));
      }
    }
  }
  return m;
}

CircleFamilyReport circle_family(const BoundaryFunction& g, const std::string& label, cplx center,
                                 const BunchSummary& bunch, const ClassifyOptions& opt, std::size_t n_phi,
                                 double noise_unit) {
  CircleFamilyReport fam;
  fam.label = label;
  fam.center = center;
  if (std::abs(center) >= 1.0 - 1e-12) {
    fam.horicycle = true;
    fam.radii_skipped = opt.hyperbolic_radii;
  } else {
    for (double r : opt.hyperbolic_radii) {
      const HyperbolicCircle h(center, r);
      if (h.max_modulus() > opt.grid.r_max) {
        fam.radii_skipped.push_back(r);
        continue;
      }
      fam.radii_used.push_back(r);
      const auto w = h.sample(opt.circle_samples);
      std::vector<SliceModes> modes;
      modes.reserve(w.size());
      for (const auto& wk : w) modes.push_back(slice_modes(g, wk, opt.max_nu, n_phi, opt.grid.r_max));
      const double sqrt_k = std::sqrt(static_cast<double>(opt.circle_samples / 4));
      for (int nu = -opt.max_nu; nu <= opt.max_nu; ++nu) {
        std::vector<cplx> values(w.size());
        double amp = 1.0;
        for (std::size_t k = 0; k < w.size(); ++k) {
          values[k] = modes[k].f(nu);
          amp = std::max(amp, std::pow(1.0 - std::norm(w[k]), -0.5 * nu));
        }
        fam.tests.push_back(
            meromorphic_extension_test(h, values, std::max(nu, 0), opt.tol, noise_unit * amp * sqrt_k));
        fam.worst_ratio = std::max(fam.worst_ratio, fam.tests.back().ratio());
      }
    }
  }
  if (fam.radii_used.empty()) {
    fam.bunch_fallback = true;
    fam.verdict = bunch.verdict;
    fam.worst_ratio = bound_ratio(bunch.worst_residual, 1.0, opt.tol);
    return fam;
  }
  std::vector<Verdict> verdicts;
  for (const auto& t : fam.tests) verdicts.push_back(t.verdict);
  fam.verdict = combine(verdicts);
  return fam;
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(4);
  os << v;
  return os.str();
}

}  // namespace

ClassificationReport two_bunch_classify(const BoundaryFunction& f, const CPoint& a, const CPoint& b,
                                        const ClassifyOptions& opt) {
  if (f.dim() != 2 || a.dim() != 2 || b.dim() != 2)
    throw Error(ErrorCode::DimensionMismatch, "two-bunch classification runs in C^2; use cross sections for n > 2");
  if (distance(a, b) <= 1e-14) throw Error(ErrorCode::CoincidentPoints, "a and b coincide");
  if (a.norm() > 1.0 + 1e-12 || b.norm() > 1.0 + 1e-12)
    throw Error(ErrorCode::InvalidArgument, "a and b must lie in the closed ball");
  if (opt.max_nu < 0 || opt.grid.n_radial < 2) throw Error(ErrorCode::InvalidArgument, "bad classification grid");

  ClassificationReport rep;
  rep.a = a;
  rep.b = b;
  rep.tol = opt.tol;
  rep.bunch_a = bunch_test(f, a, opt.bunch_lines, opt.bunch_samples, opt.tol, opt.seed);
  rep.bunch_b = bunch_test(f, b, opt.bunch_lines, opt.bunch_samples, opt.tol, opt.seed + 1);

  const NormalizedProblem prob = normalize(f, a, b);
  rep.normalized = prob.normalized;
  rep.normalization_offset = prob.offset;
  rep.a1 = prob.a1;
  rep.b1 = prob.b1;
  rep.n_phi = choose_n_phi(f, opt.max_nu, opt.grid.n_phi, prob.offset);
  GridSpec grid = opt.grid;
  grid.n_phi = rep.n_phi;
  rep.f_scale = sample_scale(prob.g, grid);
  const double noise_unit = kNoiseUnit * std::max(rep.f_scale, 1e-300) * (1.0 + 1.0 / (1.0 - prob.offset));

  ClassifyOptions fam_opt = opt;
  fam_opt.grid = grid;
  rep.families.push_back(circle_family(prob.g, "a", prob.a1, rep.bunch_a, fam_opt, rep.n_phi, noise_unit));
  rep.families.push_back(circle_family(prob.g, "b", prob.b1, rep.bunch_b, fam_opt, rep.n_phi, noise_unit));
  for (const auto& fam : rep.families) {
    if (fam.horicycle)
      rep.notes.push_back("point " + fam.label + " is on the sphere: horicycle family replaced by the raw bunch test");
    else if (fam.bunch_fallback)
      rep.notes.push_back("no hyperbolic circle centered at " + fam.label +
                          "1 fits in |z1| <= r_max: raw bunch test used for that point");
  }

  // Operative checks on centered circles: F_nu = 0 for nu < 0, F_nu holomorphic for nu >= 0.
  const auto slices = build_slices(prob.g, -opt.max_nu, opt.max_nu, grid);
  const auto radii = grid.radii();
  const double r_out = radii.back();
  const std::size_t n_r = radii.size();
  for (const auto& s : slices) {
    SliceVerdict sv;
    sv.nu = s.nu;
    const double amp = s.nu > 0 ? std::pow(1.0 - r_out * r_out, -0.5 * s.nu) : 1.0;
    sv.noise_floor = noise_unit * amp;
    if (s.nu < 0) {
      sv.check = "vanishing";
      sv.residual = s.max_abs_f();
      sv.scale = rep.f_scale;
      sv.verdict = judge(sv.residual, sv.scale, opt.tol, sv.noise_floor);
    } else {
      sv.check = "holomorphic";
      std::vector<std::vector<cplx>> rings;
      for (std::size_t i = 0; i < n_r; ++i) rings.emplace_back(s.f_ring(i).begin(), s.f_ring(i).end());
      const auto hol = disc_holomorphy_test(radii, rings, opt.tol, sv.noise_floor);
      sv.residual = hol.residual;
      sv.scale = hol.scale;
      sv.verdict = hol.verdict;
    }
    double max_a = 0.0, max_b = 0.0;
    for (const auto& v : s.f_ring(n_r - 2)) max_a = std::max(max_a, std::abs(v));
    for (const auto& v : s.f_ring(n_r - 1)) max_b = std::max(max_b, std::abs(v));
    if (std::max(max_a, max_b) > 1e3 * sv.noise_floor && std::min(max_a, max_b) > 0.0) {
      try {
        sv.order = vanishing_order_from_maxima(s.nu, radii[n_r - 2], max_a, r_out, max_b);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::SliceIsZero) throw;
      }
    }
    if (sv.order && sv.order->exponent < -0.5) {
      rep.notes.push_back("hypothesis failure: F_" + std::to_string(s.nu) + " grows like (1-|z1|^2)^" +
                          format_double(sv.order->exponent) +
                          " near |z1| = 1, so f is not real-analytic on the sphere (finite smoothness)");
    }
    rep.slices.push_back(std::move(sv));
  }
  if (f.smoothness() != Smoothness::RealAnalytic)
    rep.notes.push_back(std::string("input is tagged ") + std::string(to_string(f.smoothness())) +
                        "; the real-analyticity hypothesis is not met");

  std::vector<Verdict> verdicts{rep.bunch_a.verdict, rep.bunch_b.verdict};
  for (const auto& fam : rep.families) verdicts.push_back(fam.verdict);
  for (const auto& sv : rep.slices) verdicts.push_back(sv.verdict);
  switch (combine(verdicts)) {
    case Verdict::Pass: rep.classification = Classification::InA; break;
    case Verdict::Fail: rep.classification = Classification::NotInA; break;
    case Verdict::Inconclusive: rep.classification = Classification::Inconclusive; break;
  }

  std::ostringstream samp;
  samp << opt.bunch_lines << " random lines per bunch (" << opt.bunch_samples << " samples each); "
       << opt.hyperbolic_radii.size() << " hyperbolic radii per family, " << opt.circle_samples
       << " samples per circle; centered grid " << grid.n_radial << "x" << grid.n_angular << " with r_max "
       << grid.r_max << "; |nu| <= " << opt.max_nu << "; n_phi " << rep.n_phi
       << ". Finitely many lines and radii are sampled; this is evidence, not a proof over the continuum.";
  rep.sampling = samp.str();
  return rep;
}

}  // namespace holext
