#include "holext/reconstruct.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "holext/errors.hpp"

namespace holext {

TaylorFit taylor_coeffs(const FourierSlice& slice, int max_mu, double tol, double noise_floor) {
  const std::size_t n_ang = slice.angles.size();
  const std::size_t n_r = slice.radii.size();
  if (n_r == 0 || n_ang < 16 || !is_power_of_two(n_ang))
    throw Error(ErrorCode::InvalidArgument, "slice grid needs a power-of-two angular count >= 16");
  if (max_mu < 0 || static_cast<std::size_t>(max_mu) >= n_ang / 2)
    throw Error(ErrorCode::InvalidArgument, "max_mu must lie in [0, n_angular / 2)");

  std::vector<std::vector<cplx>> b(n_r);
  TaylorFit fit;
  fit.nu = slice.nu;
  fit.noise_floor = noise_floor;
  fit.scale = slice.max_abs_f();
  for (std::size_t i = 0; i < n_r; ++i) {
    b[i] = dft_coefficients(slice.f_ring(i));
    for (std::size_t m = 1; m < n_ang / 2; ++m)
      fit.negative_residual = std::max(fit.negative_residual, std::abs(coefficient_at(b[i], -static_cast<long>(m))));
  }

  fit.c.assign(static_cast<std::size_t>(max_mu) + 1, cplx{});
  for (std::size_t mu = 0; mu < n_ang / 2; ++mu) {
    cplx num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < n_r; ++i) {
      const double rm = std::pow(slice.radii[i], static_cast<double>(mu));
      num += rm * b[i][mu];
      den += rm * rm;
    }
    const cplx c = den > 0.0 ? num / den : cplx{};
    for (std::size_t i = 0; i < n_r; ++i) {
      const double rm = std::pow(slice.radii[i], static_cast<double>(mu));
      fit.spread = std::max(fit.spread, std::abs(b[i][mu] - c * rm));
    }
    if (mu <= static_cast<std::size_t>(max_mu)) fit.c[mu] = c;
  }

  const double bound = std::max(10.0 * tol * fit.scale, noise_floor);
  const double worst = std::max(fit.spread, fit.negative_residual);
  if (!(worst <= bound)) {
    std::ostringstream os;
    os << "F_" << slice.nu << " Taylor coefficients disagree across radii (spread " << worst << ", bound " << bound
       << ")";
    throw Error(ErrorCode::RadialInconsistency, os.str());
  }
  return fit;
}

namespace {

CPoint random_sphere_point_in_slab(Rng& rng, double r_max) {
  for (;;) {
    CPoint z = random_sphere_point(2, rng);
    if (std::abs(z[0]) <= r_max) return z;
  }
}

}  // namespace

ExtensionModel assemble_extension(const BoundaryFunction& f, int V, int M, const GridSpec& grid, double tol,
                                  std::uint64_t seed) {
  if (f.dim() != 2) throw Error(ErrorCode::DimensionMismatch, "assemble_extension works in C^2");
  if (V < 0 || M < 0) throw Error(ErrorCode::InvalidArgument, "V and M must be nonnegative");

  ExtensionModel model;
  model.V = V;
  model.M = M;
  model.tol = tol;
  model.n_phi = choose_n_phi(f, V, grid.n_phi);
  GridSpec g = grid;
  g.n_phi = model.n_phi;

  Rng rng(seed);
  constexpr std::size_t kBoundaryPoints = 500;
  std::vector<CPoint> check;
  check.reserve(kBoundaryPoints);
  std::vector<cplx> truth;
  truth.reserve(kBoundaryPoints);
  for (std::size_t k = 0; k < kBoundaryPoints; ++k) {
    check.push_back(random_sphere_point_in_slab(rng, g.r_max));
    truth.push_back(f.evaluate(check.back()));
    model.f_scale = std::max(model.f_scale, std::abs(truth.back()));
  }

  const auto slices = build_slices(f, 0, V, g);
  const double r_out = g.radii().back();
  const double noise_unit = 1e-13 * std::max(model.f_scale, 1e-300);
  model.coeffs.assign(static_cast<std::size_t>((V + 1) * (M + 1)), cplx{});
  for (const auto& s : slices) {
    const double floor = noise_unit * std::pow(1.0 - r_out * r_out, -0.5 * s.nu);
    const TaylorFit fit = taylor_coeffs(s, M, tol, floor);
    model.spreads.push_back(std::max(fit.spread, fit.negative_residual));
    for (int mu = 0; mu <= M; ++mu)
      model.coeffs[static_cast<std::size_t>(s.nu * (M + 1) + mu)] = fit.c[static_cast<std::size_t>(mu)];
  }

  for (std::size_t k = 0; k < kBoundaryPoints; ++k)
    model.boundary_error = std::max(model.boundary_error, std::abs(eval_extension(model, check[k]) - truth[k]));
  model.boundary_points = kBoundaryPoints;
  if (model.boundary_error > 100.0 * tol * std::max(1.0, model.f_scale)) {
    std::ostringstream os;
    os << "boundary error " << model.boundary_error << " with V = " << V << ", M = " << M;
    throw Error(ErrorCode::TruncationInsufficient, os.str());
  }
  return model;
}

cplx eval_extension(const ExtensionModel& model, const CPoint& z) {
  if (z.dim() != 2) throw Error(ErrorCode::DimensionMismatch, "extension models live on C^2");
  if (z.norm() > 1.0 + 1e-9) throw Error(ErrorCode::InvalidArgument, "eval_extension needs |z| <= 1");
  cplx total = 0.0;
  cplx z2p = 1.0;
  for (int nu = 0; nu <= model.V; ++nu) {
    // Horner in z1
    cplx inner_sum = 0.0;
    for (int mu = model.M; mu >= 0; --mu) inner_sum = inner_sum * z[0] + model.coeff(nu, mu);
    total += inner_sum * z2p;
    z2p *= z[1];
  }
  return total;
}

// ---------------------------------------------------------------------------

std::vector<CircleSampleSet> sample_on_circles(const std::function<cplx(cplx)>& F,
                                               std::span<const HyperbolicCircle> circles, std::size_t count) {
  std::vector<CircleSampleSet> out;
  for (const auto& c : circles) {
    CircleSampleSet set{c, {}};
    for (const auto& w : c.sample(count)) set.values.push_back(F(w));
    out.push_back(std::move(set));
  }
  return out;
}

cplx AgDecomposition::operator()(cplx w) const {
  const double q = 1.0 / (1.0 - std::norm(w));
  cplx total = 0.0;
  double qj = 1.0;
  for (int j = 0; j <= nu; ++j) {
    cplx hj = 0.0;
    for (int mu = M; mu >= 0; --mu) hj = hj * w + h[static_cast<std::size_t>(j)][static_cast<std::size_t>(mu)];
    total += hj * qj;
    qj *= q;
  }
  return total;
}

AgDecomposition ag_decompose(std::span<const CircleSampleSet> samples, int nu, int M) {
  if (nu < 0 || M < 0) throw Error(ErrorCode::InvalidArgument, "nu and M must be nonnegative");
  std::vector<double> radii;
  std::size_t rows = 0;
  for (const auto& s : samples) {
    if (s.circle.is_horicycle() || s.circle.max_modulus() >= 1.0)
      throw Error(ErrorCode::InvalidArgument, "sample circles must stay inside the open disc");
    const double r = s.circle.radius();
    if (std::none_of(radii.begin(), radii.end(), [r](double x) { return std::abs(x - r) < 1e-12; }))
      radii.push_back(r);
    rows += s.values.size();
  }
  if (radii.size() < static_cast<std::size_t>(nu) + 2)
    throw Error(ErrorCode::InvalidArgument, "need samples on at least nu + 2 distinct radii");
  const auto cols = static_cast<Eigen::Index>((nu + 1) * (M + 1));
  if (rows < static_cast<std::size_t>(cols)) throw Error(ErrorCode::InvalidArgument, "fewer samples than unknowns");

  Eigen::MatrixXcd A(static_cast<Eigen::Index>(rows), cols);
  Eigen::VectorXcd y(static_cast<Eigen::Index>(rows));
  Eigen::Index row = 0;
  for (const auto& s : samples) {
    const auto w = s.circle.sample(s.values.size());
    for (std::size_t k = 0; k < w.size(); ++k, ++row) {
      const double q = 1.0 / (1.0 - std::norm(w[k]));
      double qj = 1.0;
      for (int j = 0; j <= nu; ++j) {
        cplx wm = 1.0;
        for (int mu = 0; mu <= M; ++mu) {
          A(row, j * (M + 1) + mu) = wm * qj;
          wm *= w[k];
        }
        qj *= q;
      }
      y(row) = s.values[k];
    }
  }
  Eigen::VectorXd col_scale(cols);
  for (Eigen::Index c = 0; c < cols; ++c) {
    col_scale(c) = A.col(c).norm();
    if (col_scale(c) > 0.0) A.col(c) /= col_scale(c);
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  AgDecomposition out;
  out.nu = nu;
  out.M = M;
  out.n_samples = rows;
  out.condition = sv(sv.size() - 1) > 0.0 ? sv(0) / sv(sv.size() - 1) : INFINITY;
  if (!(out.condition <= 1e10)) {
    std::ostringstream os;
    os << "design matrix condition estimate " << out.condition << " exceeds 1e10";
    throw Error(ErrorCode::IllConditioned, os.str());
  }
  const Eigen::VectorXcd x = svd.solve(y);
  const Eigen::VectorXcd r = A * x - y;
  out.rms_residual = r.norm() / std::sqrt(static_cast<double>(rows));
  out.max_residual = r.cwiseAbs().maxCoeff();
  out.h.assign(static_cast<std::size_t>(nu) + 1, std::vector<cplx>(static_cast<std::size_t>(M) + 1));
  for (int j = 0; j <= nu; ++j) {
    for (int mu = 0; mu <= M; ++mu) {
      const Eigen::Index c = j * (M + 1) + mu;
      out.h[static_cast<std::size_t>(j)][static_cast<std::size_t>(mu)] =
          col_scale(c) > 0.0 ? x(c) / col_scale(c) : cplx{};
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

CrossSectionPlane::CrossSectionPlane(CPoint origin, CPoint e1, CPoint e2)
    : origin_(std::move(origin)), e1_(std::move(e1)), e2_(std::move(e2)), rho_(0.0) {
  if (e1_.dim() != origin_.dim() || e2_.dim() != origin_.dim())
    throw Error(ErrorCode::DimensionMismatch, "plane vectors must share the ambient dimension");
  if (std::abs(e1_.norm() - 1.0) > 1e-12 || std::abs(e2_.norm() - 1.0) > 1e-12 || std::abs(inner(e1_, e2_)) > 1e-12)
    throw Error(ErrorCode::InvalidArgument, "plane directions must be orthonormal");
  if (std::abs(inner(origin_, e1_)) > 1e-12 || std::abs(inner(origin_, e2_)) > 1e-12)
    throw Error(ErrorCode::InvalidArgument, "plane origin must be orthogonal to its directions");
  const double q = origin_.norm_sq();
  if (q >= 1.0) throw Error(ErrorCode::LineMissesBall, "plane does not meet the open ball");
  rho_ = std::sqrt(1.0 - q);
}

CPoint CrossSectionPlane::to_ambient(const CPoint& w) const {
  if (w.dim() != 2) throw Error(ErrorCode::DimensionMismatch, "plane coordinates are in C^2");
  return origin_ + (rho_ * w[0]) * e1_ + (rho_ * w[1]) * e2_;
}

CPoint CrossSectionPlane::to_plane(const CPoint& z) const {
  if (z.dim() != dim()) throw Error(ErrorCode::DimensionMismatch, "point dimension differs from the plane's");
  const CPoint v = z - origin_;
  return CPoint{inner(v, e1_) / rho_, inner(v, e2_) / rho_};
}

double CrossSectionPlane::distance_to(const CPoint& z) const { return distance(z, to_ambient(to_plane(z))); }

CrossSectionPlane plane_through(const CPoint& a, const CPoint& b, const CPoint& hint) {
  if (a.dim() != b.dim() || a.dim() != hint.dim()) throw Error(ErrorCode::DimensionMismatch, "dimension mismatch");
  if (distance(a, b) <= 1e-14) throw Error(ErrorCode::CoincidentPoints, "a and b coincide");
  CPoint e1 = b - a;
  e1 *= 1.0 / e1.norm();
  CPoint e2 = hint - inner(hint, e1) * e1;
  const double n2 = e2.norm();
  if (n2 < 1e-10) throw Error(ErrorCode::InvalidArgument, "hint is parallel to the line through a and b");
  e2 *= 1.0 / n2;
  e2 -= inner(e2, e1) * e1;  // one reorthogonalization pass
  e2 *= 1.0 / e2.norm();
  CPoint q0 = a - inner(a, e1) * e1 - inner(a, e2) * e2;
  return CrossSectionPlane(std::move(q0), std::move(e1), std::move(e2));
}

std::vector<CrossSectionPlane> random_planes(const CPoint& a, const CPoint& b, std::size_t count, std::uint64_t seed) {
  if (a.dim() < 3) throw Error(ErrorCode::DimensionMismatch, "cross sections need n >= 3");
  Rng rng(seed);
  std::vector<CrossSectionPlane> out;
  while (out.size() < count) {
    try {
      out.push_back(plane_through(a, b, random_unit_vector(a.dim(), rng)));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InvalidArgument) throw;
    }
  }
  return out;
}

namespace {

MonomialSum substitute(const MonomialSum& f, const CrossSectionPlane& plane) {
  const std::size_t n = f.dim();
  std::vector<MonomialSum> z, zbar;
  for (std::size_t j = 0; j < n; ++j) {
    const cplx q = plane.origin()[j];
    const cplx u = plane.rho() * plane.e1()[j];
    const cplx v = plane.rho() * plane.e2()[j];
    z.push_back(MonomialSum::constant(2, q) + u * MonomialSum::coordinate(2, 0) + v * MonomialSum::coordinate(2, 1));
    zbar.push_back(MonomialSum::constant(2, std::conj(q)) + std::conj(u) * MonomialSum::conj_coordinate(2, 0) +
                   std::conj(v) * MonomialSum::conj_coordinate(2, 1));
  }
  std::map<std::pair<std::size_t, unsigned>, MonomialSum> zpow, zbarpow;
  auto power = [](std::map<std::pair<std::size_t, unsigned>, MonomialSum>& cache, const MonomialSum& base,
                  std::size_t j, unsigned p) -> const MonomialSum& {
    auto it = cache.find({j, p});
    if (it == cache.end()) it = cache.emplace(std::make_pair(j, p), base.pow(p)).first;
    return it->second;
  };
  MonomialSum out(2);
  for (const auto& t : f.terms()) {
    MonomialSum term = MonomialSum::constant(2, t.coeff);
    for (std::size_t j = 0; j < n; ++j) {
      if (t.alpha[j] > 0) term = term * power(zpow, z[j], j, t.alpha[j]);
      if (t.beta[j] > 0) term = term * power(zbarpow, zbar[j], j, t.beta[j]);
    }
    out += term;
  }
  return out;
}

}  // namespace

BoundaryFunction restrict_to_plane(const BoundaryFunction& f, const CrossSectionPlane& plane) {
  if (f.dim() != plane.dim()) throw Error(ErrorCode::DimensionMismatch, "function and plane dimensions differ");
  const std::string label = f.label() + " on a cross section";
  if (const auto* m = std::get_if<MonomialSum>(&f.rep())) return BoundaryFunction(substitute(*m, plane), label);
  if (const auto* r = std::get_if<RationalSphereFunction>(&f.rep()))
    return BoundaryFunction(RationalSphereFunction{substitute(r->numerator, plane), substitute(r->denominator, plane)},
                            f.smoothness(), label);
  return BoundaryFunction(BlackBoxSampler{[f, plane](const CPoint& w) { return f.evaluate(plane.to_ambient(w)); }, 2},
                          f.smoothness(), label);
}

std::string CrossSectionReport::agreement_csv() const {
  std::ostringstream os;
  os << std::setprecision(17) << "plane,point,re_z1,re,im\n";
  for (std::size_t p = 0; p < values.size(); ++p) {
    for (std::size_t k = 0; k < values[p].size(); ++k)
      os << p << ',' << k << ',' << line_points[k][0].real() << ',' << values[p][k].real() << ','
         << values[p][k].imag() << '\n';
  }
  return os.str();
}

CrossSectionReport cross_section_extend(const BoundaryFunction& f, const CPoint& a, const CPoint& b,
                                        std::span<const CrossSectionPlane> planes,
                                        const CrossSectionOptions& opt) {
  if (f.dim() < 3 || a.dim() != f.dim() || b.dim() != f.dim())
    throw Error(ErrorCode::DimensionMismatch, "cross sections need n >= 3 and matching dimensions");
  if (distance(a, b) <= 1e-14) throw Error(ErrorCode::CoincidentPoints, "a and b coincide");
  if (planes.empty()) throw Error(ErrorCode::InvalidArgument, "no planes given");
  for (const auto& q : planes) {
    if (q.dim() != f.dim()) throw Error(ErrorCode::DimensionMismatch, "plane dimension differs");
    if (q.distance_to(a) > 1e-12 || q.distance_to(b) > 1e-12)
      throw Error(ErrorCode::PlaneMismatch, "a or b does not lie on a cross-section plane");
  }

  CrossSectionReport rep;
  const ComplexLine line = line_through_points(a, b);
  rep.origin_on_line = line.distance_to(CPoint::zero(f.dim())) <= 1e-12;
  const SphereCircle circle = sphere_intersection(line);
  Rng rng(opt.seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (std::size_t k = 0; k < opt.line_points; ++k) {
    const double s = 0.9 * std::sqrt(unif(rng));
    const double t = 2.0 * std::numbers::pi * unif(rng);
    rep.line_points.push_back(line.point_at(circle.center + circle.radius * std::polar(s, t)));
  }

  rep.all_in_A = true;
  for (const auto& q : planes) {
    PlaneResult pr{q};
    const BoundaryFunction g = restrict_to_plane(f, q);
    try {
      const auto cls = two_bunch_classify(g, q.to_plane(a), q.to_plane(b), opt.classify);
      pr.classification = cls.classification;
      if (cls.classification == Classification::InA)
        pr.model = assemble_extension(g, opt.V, opt.M, opt.classify.grid, opt.classify.tol, opt.seed);
      else
        pr.failure = "classification: " + std::string(to_string(cls.classification));
    } catch (const Error& e) {
      pr.failure = e.what();
    }
    if (!pr.model) rep.all_in_A = false;
    rep.planes.push_back(std::move(pr));
  }

  for (const auto& pr : rep.planes) {
    std::vector<cplx> vals;
    if (pr.model) {
      for (const auto& z : rep.line_points) vals.push_back(eval_extension(*pr.model, pr.plane.to_plane(z)));
    }
    rep.values.push_back(std::move(vals));
  }
  for (std::size_t p = 0; p < rep.values.size(); ++p) {
    for (std::size_t q = p + 1; q < rep.values.size(); ++q) {
      if (rep.values[p].empty() || rep.values[q].empty()) continue;
      for (std::size_t k = 0; k < rep.line_points.size(); ++k)
        rep.max_disagreement = std::max(rep.max_disagreement, std::abs(rep.values[p][k] - rep.values[q][k]));
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------

GluedExtension::GluedExtension(BoundaryFunction f, const CPoint& a, const CPoint& b, int V, int M)
    : f_(std::move(f)), direction_(CPoint::zero(a.dim())), fallback_(CPoint::zero(a.dim())), dim_(a.dim()), V_(V),
      M_(M) {
  if (dim_ < 3 || f_.dim() != dim_ || b.dim() != dim_)
    throw Error(ErrorCode::DimensionMismatch, "glued extensions need n >= 3 and matching dimensions");
  const ComplexLine line = line_through_points(a, b);
  if (line.distance_to(CPoint::zero(dim_)) > 1e-12)
    throw Error(ErrorCode::InvalidArgument, "the line through a and b must pass through 0");
  direction_ = line.direction();
  for (std::size_t j = 0; j < dim_; ++j) {
    CPoint e = CPoint::basis(dim_, j);
    e -= inner(e, direction_) * direction_;
    if (e.norm() > 0.5) {
      fallback_ = e * (1.0 / e.norm());
      break;
    }
  }
}

std::size_t GluedExtension::planes_built() const {
  std::lock_guard lock(mutex_);
  return cache_.size();
}

cplx GluedExtension::operator()(const CPoint& z) const {
  if (z.dim() != dim_) throw Error(ErrorCode::DimensionMismatch, "point dimension differs");
  CPoint perp = z - inner(z, direction_) * direction_;
  CPoint e2 = perp.norm() > 1e-12 ? perp * (1.0 / perp.norm()) : fallback_;
  std::size_t big = 0;
  for (std::size_t j = 1; j < dim_; ++j) {
    if (std::abs(e2[j]) > std::abs(e2[big]) + 1e-9) big = j;
  }
  e2 *= std::conj(e2[big]) / std::abs(e2[big]);
  std::vector<double> key;
  for (std::size_t j = 0; j < dim_; ++j) {
    key.push_back(std::round(e2[j].real() * 1e10));
    key.push_back(std::round(e2[j].imag() * 1e10));
  }
  std::shared_ptr<const std::pair<CrossSectionPlane, ExtensionModel>> entry;
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) entry = it->second;
  }
  if (!entry) {
    CrossSectionPlane plane = plane_through(CPoint::zero(dim_), direction_, e2);
    ExtensionModel model = assemble_extension(restrict_to_plane(f_, plane), V_, M_);
    entry = std::make_shared<const std::pair<CrossSectionPlane, ExtensionModel>>(std::move(plane), std::move(model));
    std::lock_guard lock(mutex_);
    cache_.emplace(key, entry);
  }
  return eval_extension(entry->second, entry->first.to_plane(z));
}

ForelliReport forelli_check(const std::function<cplx(const CPoint&)>& E, std::size_t dim, std::size_t lines,
                            double tol, std::uint64_t seed, std::size_t samples) {
  if (dim < 2) throw Error(ErrorCode::DimensionMismatch, "forelli_check needs n >= 2");
  if (lines == 0) throw Error(ErrorCode::InvalidArgument, "forelli_check needs at least one line");
  ForelliReport rep;
  rep.lines = lines;
  rep.samples = samples;
  rep.tol = tol;
  Rng rng(seed);
  const std::vector<double> radii{0.25, 0.5};
  std::vector<Verdict> verdicts;
  for (std::size_t l = 0; l < lines; ++l) {
    const CPoint u = random_unit_vector(dim, rng);
    std::vector<std::vector<cplx>> rings;
    for (double r : radii) {
      std::vector<cplx> ring(samples);
      for (std::size_t k = 0; k < samples; ++k) {
        const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(samples);
        ring[k] = E(std::polar(r, t) * u);
      }
      rings.push_back(std::move(ring));
    }
    const auto hol = disc_holomorphy_test(radii, rings, tol);
    rep.worst_residual = std::max(rep.worst_residual, hol.residual);
    rep.scale = std::max(rep.scale, hol.scale);
    verdicts.push_back(hol.verdict);
  }
  rep.verdict = combine(verdicts);
  return rep;
}

ForelliReport forelli_check(const ExtensionModel& model, std::size_t lines, double tol, std::uint64_t seed,
                            std::size_t samples) {
  return forelli_check([&model](const CPoint& z) { return eval_extension(model, z); }, 2, lines, tol, seed, samples);
}

}  // namespace holext
