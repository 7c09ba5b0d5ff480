#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "holext/boundary.hpp"
#include "holext/spectral.hpp"

namespace holext {

enum class Verdict { Pass, Fail, Inconclusive };
std::string_view to_string(Verdict v) noexcept;

inline constexpr double kDefaultTol = 1e-8;
inline constexpr double kInconclusiveFactor = 10.0;

/// Pass iff residual <= max(tol * scale, floor); Inconclusive up to ten times that bound.
/// The floor carries the estimated roundoff level of the residual.
Verdict judge(double residual, double scale, double tol, double floor = 0.0);
/// residual / max(tol * scale, floor): at most 1 on a pass.
double bound_ratio(double residual, double scale, double tol, double floor = 0.0);
/// Fail dominates Inconclusive, which dominates Pass.
Verdict combine(std::span<const Verdict> verdicts);

// ---------------------------------------------------------------------------

/// Restriction of f to one circle L cap dB^n, tested for vanishing negative Fourier
/// coefficients (equivalent to a continuous extension holomorphic in L cap B^n).
struct MomentReport {
  std::string line_id;
  std::size_t n_samples = 0;
  std::vector<double> residuals;  // |g^(-m)|, m = 1..N/4
  double residual = 0.0;          // max of the above
  double scale = 0.0;             // max |g|
  double tol = kDefaultTol;
  Verdict verdict = Verdict::Pass;

  double relative_residual() const { return scale > 0.0 ? residual / scale : residual; }
};

/// Negative-frequency test on equispaced samples of a circle restriction.
MomentReport negative_frequency_test(std::span<const cplx> samples, double tol = kDefaultTol,
                                     std::string line_id = {});

MomentReport holomorphic_extension_test(const BoundaryFunction& f, const ComplexLine& line,
                                        std::size_t n_samples = 256, double tol = kDefaultTol,
                                        std::string line_id = {});

/// (1 / 2 pi i) \oint g(zeta) d zeta / (zeta - t) over L cap dB^n, trapezoidal rule.
cplx moment_integral(const BoundaryFunction& f, const ComplexLine& line, cplx t, std::size_t n_samples = 256);

struct MomentSweep {
  std::vector<cplx> t;
  std::vector<cplx> values;
  double residual = 0.0;  // max |value|
  double scale = 0.0;     // max |g| on the circle
  double tol = kDefaultTol;
  Verdict verdict = Verdict::Pass;
};

/// Moments against `count` poles t on the circle |t - zeta0| = rho + 0.5 of the line parameter.
MomentSweep moment_sweep(const BoundaryFunction& f, const ComplexLine& line, std::size_t count = 10,
                         std::size_t n_samples = 256, double tol = kDefaultTol);

// ---------------------------------------------------------------------------

/// Meromorphic extension of F from H(a1, r) into its disc with at most a pole of order
/// `pole_bound` at the hyperbolic center a1. The residual is the l2 norm of the negative
/// Fourier coefficients left after removing the best principal part sum_{j<=bound} c_j (w - a1)^{-j}.
struct PoleTestReport {
  HyperbolicCircle circle;
  int pole_bound = 0;
  std::size_t n_samples = 0;
  double residual = 0.0;
  double scale = 0.0;  // max |F| on the circle
  double noise_floor = 0.0;
  double tol = kDefaultTol;
  Verdict verdict = Verdict::Pass;

  double relative_residual() const { return scale > 0.0 ? residual / scale : residual; }
  double ratio() const { return bound_ratio(residual, scale, tol, noise_floor); }
};

/// `samples` are F(w(theta_k)) at the circle's Euclidean parametrization, theta_k = 2 pi k / N.
PoleTestReport meromorphic_extension_test(const HyperbolicCircle& circle, std::span<const cplx> samples,
                                          int pole_bound, double tol = kDefaultTol, double noise_floor = 0.0);
PoleTestReport meromorphic_extension_test(const HyperbolicCircle& circle, const std::function<cplx(cplx)>& F,
                                          std::size_t n_samples, int pole_bound, double tol = kDefaultTol);

// ---------------------------------------------------------------------------

/// Holomorphy of a function sampled on concentric circles |w - center| = r_i (same equispaced
/// angles on every ring): negative coefficients on every ring must vanish and every inner ring
/// must match the Cauchy continuation of the outermost one.
struct DiscHolomorphyReport {
  double negative_residual = 0.0;
  double radial_residual = 0.0;
  double residual = 0.0;
  double scale = 0.0;
  double noise_floor = 0.0;
  Verdict verdict = Verdict::Pass;
};

DiscHolomorphyReport disc_holomorphy_test(std::span<const double> radii, std::span<const std::vector<cplx>> rings,
                                          double tol = kDefaultTol, double noise_floor = 0.0);

// ---------------------------------------------------------------------------

struct BunchSummary {
  CPoint point = CPoint::zero(2);
  std::size_t requested = 0;
  std::size_t tested = 0;
  std::size_t skipped_tangent = 0;
  std::size_t skipped_vertical = 0;
  std::size_t n_samples = 0;
  double worst_residual = 0.0;  // max over lines of residual / scale
  Verdict verdict = Verdict::Pass;
  std::vector<MomentReport> reports{};
};

/// holomorphic_extension_test on `lines` seeded random lines through a.
BunchSummary bunch_test(const BoundaryFunction& f, const CPoint& a, std::size_t lines, std::size_t n_samples = 256,
                        double tol = kDefaultTol, std::uint64_t seed = 1);

// ---------------------------------------------------------------------------

enum class Classification { InA, NotInA, Inconclusive };
std::string_view to_string(Classification c) noexcept;

struct ClassifyOptions {
  int max_nu = 12;
  GridSpec grid{};
  std::vector<double> hyperbolic_radii{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  std::size_t circle_samples = 64;
  std::size_t bunch_lines = 32;
  std::size_t bunch_samples = 256;
  double tol = kDefaultTol;
  std::uint64_t seed = 1;
};

/// Pole tests of every F_nu along one family of hyperbolic circles H(center, r).
struct CircleFamilyReport {
  std::string label;
  cplx center{};
  bool horicycle = false;
  bool bunch_fallback = false;  // no circle of the family fits in |z1| <= r_max
  std::vector<double> radii_used;
  std::vector<double> radii_skipped;
  std::vector<PoleTestReport> tests;
  double worst_ratio = 0.0;  // max over tests of residual / pass bound
  Verdict verdict = Verdict::Pass;
};

struct SliceVerdict {
  int nu = 0;
  std::string check;  // "vanishing" for nu < 0, "holomorphic" for nu >= 0
  double residual = 0.0;
  double scale = 0.0;
  double noise_floor = 0.0;
  Verdict verdict = Verdict::Pass;
  std::optional<VanishingOrderEstimate> order;
};

struct ClassificationReport {
  CPoint a = CPoint::zero(2);
  CPoint b = CPoint::zero(2);
  bool normalized = false;
  double normalization_offset = 0.0;
  cplx a1{};
  cplx b1{};
  std::size_t n_phi = 0;
  double f_scale = 0.0;
  double tol = kDefaultTol;
  BunchSummary bunch_a;
  BunchSummary bunch_b;
  std::vector<CircleFamilyReport> families;
  std::vector<SliceVerdict> slices;
  Classification classification = Classification::Inconclusive;
  std::vector<std::string> notes;
  std::string sampling;

  /// The verdict of the operative slice tests only.
  const SliceVerdict& slice(int nu) const;
};

ClassificationReport two_bunch_classify(const BoundaryFunction& f, const CPoint& a, const CPoint& b,
                                        const ClassifyOptions& options = {});

/// z2-angular bandwidth max |alpha_2 - beta_2| for monomial sums; empty otherwise.
std::optional<unsigned> z2_bandwidth(const BoundaryFunction& f);

/// Quadrature size for slices of f: exact bandwidth when known, otherwise `fallback`,
/// enlarged when a normalization at distance `offset` spreads the z2 spectrum.
std::size_t choose_n_phi(const BoundaryFunction& f, int max_nu, std::size_t fallback, double offset = 0.0);

}  // namespace holext
