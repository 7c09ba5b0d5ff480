#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <vector>

#include "holext/dft.hpp"

namespace holext {

/// A point of C^n, n >= 2.
class CPoint {
 public:
  explicit CPoint(std::vector<cplx> coords);
  CPoint(std::initializer_list<cplx> coords);

  static CPoint zero(std::size_t dim);
  static CPoint basis(std::size_t dim, std::size_t axis);

  std::size_t dim() const noexcept { return coords_.size(); }
  std::span<const cplx> coords() const noexcept { return coords_; }
  const cplx& operator[](std::size_t j) const { return coords_[j]; }
  cplx& operator[](std::size_t j) { return coords_[j]; }

  double norm_sq() const noexcept;
  double norm() const noexcept;

  CPoint& operator+=(const CPoint& other);
  CPoint& operator-=(const CPoint& other);
  CPoint& operator*=(cplx s);

  friend CPoint operator+(CPoint lhs, const CPoint& rhs) { return lhs += rhs; }
  friend CPoint operator-(CPoint lhs, const CPoint& rhs) { return lhs -= rhs; }
  friend CPoint operator*(cplx s, CPoint p) { return p *= s; }
  friend CPoint operator*(CPoint p, cplx s) { return p *= s; }

 private:
  std::vector<cplx> coords_;
};

/// Hermitian inner product <u, v> = sum_j u_j conj(v_j).
cplx inner(const CPoint& u, const CPoint& v);
double distance(const CPoint& u, const CPoint& v);

/// Affine complex line {base + zeta * direction}. Always stored in canonical form:
/// unit direction and base orthogonal to it (the point closest to the origin).
class ComplexLine {
 public:
  ComplexLine(CPoint point, CPoint direction);

  const CPoint& base() const noexcept { return base_; }
  const CPoint& direction() const noexcept { return direction_; }
  std::size_t dim() const noexcept { return base_.dim(); }

  CPoint point_at(cplx zeta) const;
  /// Parameter of the orthogonal projection of p onto the line.
  cplx parameter_of(const CPoint& p) const;
  double distance_to(const CPoint& p) const;

 private:
  CPoint base_;
  CPoint direction_;
};

ComplexLine line_through_points(const CPoint& a, const CPoint& b);

/// L cap dB^n = {base + zeta d : |zeta - center| = radius}.
struct SphereCircle {
  ComplexLine line;
  cplx center;
  double radius;

  CPoint point_at(double theta) const;
};

SphereCircle sphere_intersection(const ComplexLine& line);

struct CircleSample {
  double theta;
  cplx zeta;
  CPoint z;
};

/// N equispaced samples, theta_k = 2 pi k / N. N must be a power of two (>= 4).
std::vector<CircleSample> sample_circle(const SphereCircle& circle, std::size_t count);

/// Disc automorphism u_a(w) = (w - a) / (1 - conj(a) w).
cplx disc_automorphism(cplx a, cplx w);

/// The ball automorphism U_a of B^2 for a = (a1, 0):
///   U_a(z1, z2) = ((z1 - a1)/(1 - conj(a1) z1), sqrt(1 - |a1|^2) z2 / (1 - conj(a1) z1)).
/// Its inverse is U_{-a}.
class MoebiusMap {
 public:
  explicit MoebiusMap(cplx a1);

  cplx parameter() const noexcept { return a1_; }
  MoebiusMap inverse() const { return MoebiusMap(-a1_); }
  CPoint apply(const CPoint& z) const;
  /// Image of a line meeting the open ball (the map sends complex lines to complex lines).
  ComplexLine apply(const ComplexLine& line) const;

 private:
  cplx a1_;
  double scale_;
};

MoebiusMap moebius(cplx a1);

/// Pseudo-hyperbolic circle H(center, r) = {|u_center(w)| = r} of the unit disc. For
/// |center| = 1 it is the horicycle of Euclidean radius r tangent to the unit circle at center.
class HyperbolicCircle {
 public:
  HyperbolicCircle(cplx center, double radius);

  cplx center() const noexcept { return center_; }
  double radius() const noexcept { return radius_; }
  bool is_horicycle() const noexcept { return horicycle_; }

  cplx euclidean_center() const noexcept { return euclid_center_; }
  double euclidean_radius() const noexcept { return euclid_radius_; }
  /// Largest |w| on the circle.
  double max_modulus() const noexcept { return std::abs(euclid_center_) + euclid_radius_; }

  /// Euclidean parametrization w(theta) = euclidean_center + euclidean_radius e^{i theta}.
  cplx point_at(double theta) const;
  std::vector<cplx> sample(std::size_t count) const;

 private:
  cplx center_;
  double radius_;
  bool horicycle_;
  cplx euclid_center_;
  double euclid_radius_;
};

/// Projection onto the z1-plane of L cap dB^2 for a line L through (a1, 0).
HyperbolicCircle project_to_hyperbolic_circle(const ComplexLine& line, cplx a1);

/// Automorphism of B^2 (a unitary change of coordinates composed with U_c) that carries a
/// line meeting the open ball onto the coordinate line {z2 = 0}.
class AxisNormalization {
 public:
  explicit AxisNormalization(const ComplexLine& line);

  CPoint apply(const CPoint& z) const;
  CPoint invert(const CPoint& w) const;
  /// |c|, the distance from the origin to the normalized line.
  double offset() const noexcept { return offset_; }

 private:
  CPoint along_;   // unit vector along the base (or any unit normal when the line passes through 0)
  CPoint dir_;
  double offset_;
  MoebiusMap shift_;
};

using Rng = std::mt19937_64;

/// Uniform direction on the complex projective line (normalized complex Gaussian).
CPoint random_unit_vector(std::size_t dim, Rng& rng);
/// Uniform point of the closed ball of given radius.
CPoint random_ball_point(std::size_t dim, double radius, Rng& rng);
/// Uniform point of the unit sphere.
CPoint random_sphere_point(std::size_t dim, Rng& rng);

}  // namespace holext
