#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "holext/boundary.hpp"
#include "holext/exttest.hpp"
#include "holext/spectral.hpp"

namespace holext {

/// Taylor coefficients of one slice F_nu from all radial rings at once.
struct TaylorFit {
  int nu = 0;
  std::vector<cplx> c;             // c[mu], mu = 0..max_mu
  double spread = 0.0;             // max_{i, mu} |b_i(mu) - c_mu r_i^mu|
  double negative_residual = 0.0;  // max_{i, m > 0} |b_i(-m)|
  double scale = 0.0;              // max |F_nu| on the grid
  double noise_floor = 0.0;
};

/// Weighted least squares c_mu = sum_i r_i^mu b_i(mu) / sum_i r_i^{2 mu}, where b_i(mu) is the
/// mu-th Fourier coefficient on ring i. Throws RadialInconsistency when the spread (plus any
/// negative-frequency content) exceeds max(10 tol scale, noise_floor).
TaylorFit taylor_coeffs(const FourierSlice& slice, int max_mu, double tol = kDefaultTol, double noise_floor = 0.0);

/// F(z1, z2) = sum_{nu <= V, mu <= M} c_{nu mu} z1^mu z2^nu.
struct ExtensionModel {
  int V = 0;
  int M = 0;
  std::vector<cplx> coeffs;  // index nu * (M + 1) + mu
  std::vector<double> spreads;
  std::size_t n_phi = 0;
  double f_scale = 0.0;
  double boundary_error = 0.0;
  std::size_t boundary_points = 0;
  double tol = kDefaultTol;

  cplx coeff(int nu, int mu) const { return coeffs.at(static_cast<std::size_t>(nu * (M + 1) + mu)); }
};

ExtensionModel assemble_extension(const BoundaryFunction& f, int V = 12, int M = 12, const GridSpec& grid = {},
                                  double tol = kDefaultTol, std::uint64_t seed = 1);

/// Requires |z| <= 1 (up to 1e-9).
cplx eval_extension(const ExtensionModel& model, const CPoint& z);

// ---------------------------------------------------------------------------

/// Values of F at circle.sample(values.size()).
struct CircleSampleSet {
  HyperbolicCircle circle;
  std::vector<cplx> values;
};

std::vector<CircleSampleSet> sample_on_circles(const std::function<cplx(cplx)>& F,
                                               std::span<const HyperbolicCircle> circles, std::size_t count);

/// F(w) = sum_{j <= nu} h_j(w) (1 - |w|^2)^{-j}, h_j(w) = sum_{mu <= M} h[j][mu] w^mu.
struct AgDecomposition {
  int nu = 0;
  int M = 0;
  std::vector<std::vector<cplx>> h;
  double rms_residual = 0.0;
  double max_residual = 0.0;
  double condition = 0.0;  // of the column-equilibrated design matrix
  std::size_t n_samples = 0;

  cplx operator()(cplx w) const;
};

AgDecomposition ag_decompose(std::span<const CircleSampleSet> samples, int nu, int M);

// ---------------------------------------------------------------------------

/// Affine complex 2-plane q0 + span(e1, e2) of C^n, with q0 orthogonal to e1, e2. Its trace on
/// the sphere is parametrized by the unit sphere of C^2: w -> q0 + rho (w1 e1 + w2 e2).
class CrossSectionPlane {
 public:
  CrossSectionPlane(CPoint origin, CPoint e1, CPoint e2);

  const CPoint& origin() const noexcept { return origin_; }
  const CPoint& e1() const noexcept { return e1_; }
  const CPoint& e2() const noexcept { return e2_; }
  double rho() const noexcept { return rho_; }
  std::size_t dim() const noexcept { return origin_.dim(); }

  CPoint to_ambient(const CPoint& w) const;
  /// Plane coordinates of the orthogonal projection of z.
  CPoint to_plane(const CPoint& z) const;
  double distance_to(const CPoint& z) const;

 private:
  CPoint origin_;
  CPoint e1_;
  CPoint e2_;
  double rho_;
};

/// Plane through a and b spanned by the direction of L_{a,b} and the part of `hint` orthogonal to it.
CrossSectionPlane plane_through(const CPoint& a, const CPoint& b, const CPoint& hint);
std::vector<CrossSectionPlane> random_planes(const CPoint& a, const CPoint& b, std::size_t count, std::uint64_t seed);

/// f restricted to the plane, as a function on the unit sphere of C^2. Monomial and rational
/// inputs are substituted exactly; black boxes are wrapped.
BoundaryFunction restrict_to_plane(const BoundaryFunction& f, const CrossSectionPlane& plane);

struct PlaneResult {
  CrossSectionPlane plane;
  Classification classification = Classification::Inconclusive;
  std::optional<ExtensionModel> model{};
  std::string failure{};  // why no model was built
};

struct CrossSectionReport {
  std::vector<PlaneResult> planes;
  std::vector<CPoint> line_points;           // samples of L_{a,b} cap B^n
  std::vector<std::vector<cplx>> values;     // values[p][k]: plane p at line point k
  double max_disagreement = 0.0;
  bool all_in_A = false;
  bool origin_on_line = false;  // forelli_check is meaningful only in that case

  std::string agreement_csv() const;
};

struct CrossSectionOptions {
  ClassifyOptions classify{};
  int V = 12;
  int M = 12;
  std::size_t line_points = 50;
  std::uint64_t seed = 1;
};

CrossSectionReport cross_section_extend(const BoundaryFunction& f, const CPoint& a, const CPoint& b,
                                        std::span<const CrossSectionPlane> planes,
                                        const CrossSectionOptions& options = {});

/// Extension of f to B^n glued from plane models through L_{a,b}; needs 0 on L_{a,b}.
/// Every point z lies in the plane spanned by the direction of the line and the part of z
/// orthogonal to it; models are built on demand and cached per plane.
class GluedExtension {
 public:
  GluedExtension(BoundaryFunction f, const CPoint& a, const CPoint& b, int V = 12, int M = 12);

  cplx operator()(const CPoint& z) const;
  std::size_t dim() const noexcept { return dim_; }
  std::size_t planes_built() const;

 private:
  BoundaryFunction f_;
  CPoint direction_;
  CPoint fallback_;
  std::size_t dim_;
  int V_;
  int M_;
  mutable std::mutex mutex_;
  mutable std::map<std::vector<double>, std::shared_ptr<const std::pair<CrossSectionPlane, ExtensionModel>>> cache_;
};

struct ForelliReport {
  std::size_t lines = 0;
  std::size_t samples = 0;
  double worst_residual = 0.0;  // absolute
  double scale = 0.0;
  double tol = 0.0;
  Verdict verdict = Verdict::Pass;
};

/// Holomorphy of E along seeded random lines through 0, on the rings |zeta| = 0.25 and 0.5.
ForelliReport forelli_check(const std::function<cplx(const CPoint&)>& E, std::size_t dim, std::size_t lines,
                            double tol = 1e-10, std::uint64_t seed = 1, std::size_t samples = 64);
ForelliReport forelli_check(const ExtensionModel& model, std::size_t lines, double tol = 1e-10,
                            std::uint64_t seed = 1, std::size_t samples = 64);

}  // namespace holext
