#include "holext/geometry.hpp"

#include <cmath>
#include <numbers>

#include "holext/errors.hpp"

namespace holext {

namespace {

void require_same_dim(const CPoint& u, const CPoint& v) {
  if (u.dim() != v.dim()) throw Error(ErrorCode::DimensionMismatch, "points of different dimension");
}

}  // namespace

CPoint::CPoint(std::vector<cplx> coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2) throw Error(ErrorCode::DimensionMismatch, "points need n >= 2");
}

CPoint::CPoint(std::initializer_list<cplx> coords) : CPoint(std::vector<cplx>(coords)) {}

CPoint CPoint::zero(std::size_t dim) { return CPoint(std::vector<cplx>(dim)); }

CPoint CPoint::basis(std::size_t dim, std::size_t axis) {
  CPoint p = zero(dim);
  p[axis] = 1.0;
  return p;
}

double CPoint::norm_sq() const noexcept {
  double s = 0.0;
  for (const auto& c : coords_) s += std::norm(c);
  return s;
}

double CPoint::norm() const noexcept { return std::sqrt(norm_sq()); }

CPoint& CPoint::operator+=(const CPoint& other) {
  require_same_dim(*this, other);
  for (std::size_t j = 0; j < dim(); ++j) coords_[j] += other.coords_[j];
  return *this;
}

CPoint& CPoint::operator-=(const CPoint& other) {
  require_same_dim(*this, other);
  for (std::size_t j = 0; j < dim(); ++j) coords_[j] -= other.coords_[j];
  return *this;
}

CPoint& CPoint::operator*=(cplx s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

cplx inner(const CPoint& u, const CPoint& v) {
  require_same_dim(u, v);
  cplx s = 0.0;
  for (std::size_t j = 0; j < u.dim(); ++j) s += u[j] * std::conj(v[j]);
  return s;
}

double distance(const CPoint& u, const CPoint& v) { return (u - v).norm(); }

// ---------------------------------------------------------------------------

ComplexLine::ComplexLine(CPoint point, CPoint direction)
    : base_(std::move(point)), direction_(std::move(direction)) {
  require_same_dim(base_, direction_);
  const double len = direction_.norm();
  if (!(len > 1e-14)) throw Error(ErrorCode::InvalidArgument, "line direction is zero");
  direction_ *= 1.0 / len;
  base_ -= inner(base_, direction_) * direction_;
}

CPoint ComplexLine::point_at(cplx zeta) const { return base_ + zeta * direction_; }

cplx ComplexLine::parameter_of(const CPoint& p) const { return inner(p - base_, direction_); }

double ComplexLine::distance_to(const CPoint& p) const {
  return distance(p, point_at(parameter_of(p)));
}

ComplexLine line_through_points(const CPoint& a, const CPoint& b) {
  require_same_dim(a, b);
  CPoint diff = b - a;
  if (diff.norm() <= 1e-14) throw Error(ErrorCode::CoincidentPoints, "a and b coincide");
  return ComplexLine(a, diff);
}

// ---------------------------------------------------------------------------

CPoint SphereCircle::point_at(double theta) const {
  return line.point_at(center + radius * std::polar(1.0, theta));
}

SphereCircle sphere_intersection(const ComplexLine& line) {
  const double rho_sq = 1.0 - line.base().norm_sq();
  if (rho_sq <= 0.0) throw Error(ErrorCode::LineMissesBall, "line does not meet the open ball");
  const double rho = std::sqrt(rho_sq);
  if (rho < 1e-6) throw Error(ErrorCode::TangentLine, "line is tangent to the sphere");
  return SphereCircle{line, 0.0, rho};
}

std::vector<CircleSample> sample_circle(const SphereCircle& circle, std::size_t count) {
  if (count < 4 || !is_power_of_two(count))
    throw Error(ErrorCode::InvalidArgument, "circle sample count must be a power of two >= 4");
  std::vector<CircleSample> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(count);
    // Exact quarter turns keep symmetric samples bit-identical.
    cplx unit;
    switch ((4 * k) % count == 0 ? (4 * k) / count : 4) {
      case 0: unit = 1.0; break;
      case 1: unit = cplx(0.0, 1.0); break;
      case 2: unit = -1.0; break;
      case 3: unit = cplx(0.0, -1.0); break;
      default: unit = std::polar(1.0, theta);
    }
    const cplx zeta = circle.center + circle.radius * unit;
    out.push_back(CircleSample{theta, zeta, circle.line.point_at(zeta)});
  }
  return out;
}

// ---------------------------------------------------------------------------

cplx disc_automorphism(cplx a, cplx w) { return (w - a) / (1.0 - std::conj(a) * w); }

MoebiusMap::MoebiusMap(cplx a1) : a1_(a1), scale_(0.0) {
  if (std::abs(a1) > 1.0 - 1e-9)
    throw Error(ErrorCode::ParameterOnBoundary, "Moebius parameter must satisfy |a1| < 1");
  scale_ = std::sqrt(1.0 - std::norm(a1));
}

CPoint MoebiusMap::apply(const CPoint& z) const {
  if (z.dim() != 2) throw Error(ErrorCode::DimensionMismatch, "U_a acts on C^2");
  const cplx denom = 1.0 - std::conj(a1_) * z[0];
  return CPoint{(z[0] - a1_) / denom, scale_ * z[1] / denom};
}

ComplexLine MoebiusMap::apply(const ComplexLine& line) const {
  const SphereCircle circle = sphere_intersection(line);
  const CPoint p = apply(line.point_at(circle.center - 0.5 * circle.radius));
  const CPoint q = apply(line.point_at(circle.center + 0.5 * circle.radius));
  return line_through_points(p, q);
}

MoebiusMap moebius(cplx a1) { return MoebiusMap(a1); }

// ---------------------------------------------------------------------------

HyperbolicCircle::HyperbolicCircle(cplx center, double radius)
    : center_(center), radius_(radius), horicycle_(false), euclid_center_(0.0), euclid_radius_(0.0) {
  if (!(radius > 0.0 && radius < 1.0))
    throw Error(ErrorCode::InvalidArgument, "hyperbolic circle radius must lie in (0, 1)");
  const double m = std::abs(center);
  if (m > 1.0 + 1e-12) throw Error(ErrorCode::InvalidArgument, "center outside the closed disc");
  if (m >= 1.0 - 1e-12) {
    horicycle_ = true;
    center_ = center / m;
    euclid_center_ = center_ * (1.0 - radius);
    euclid_radius_ = radius;
    return;
  }
  const double r2 = radius * radius;
  const double denom = 1.0 - r2 * m * m;
  euclid_center_ = center * (1.0 - r2) / denom;
  euclid_radius_ = radius * (1.0 - m * m) / denom;
}

cplx HyperbolicCircle::point_at(double theta) const {
  return euclid_center_ + euclid_radius_ * std::polar(1.0, theta);
}

std::vector<cplx> HyperbolicCircle::sample(std::size_t count) const {
  std::vector<cplx> out(count);
  for (std::size_t k = 0; k < count; ++k)
    out[k] = point_at(2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(count));
  return out;
}

HyperbolicCircle project_to_hyperbolic_circle(const ComplexLine& line, cplx a1) {
  if (line.dim() != 2) throw Error(ErrorCode::DimensionMismatch, "projection to hyperbolic circles is defined in C^2");
  if (line.distance_to(CPoint{a1, 0.0}) > 1e-10)
    throw Error(ErrorCode::InvalidArgument, "line does not pass through (a1, 0)");
  const cplx d1 = line.direction()[0];
  if (std::abs(d1) < 1e-12)
    throw Error(ErrorCode::VerticalLine, "line z1 = a1 projects to a single point");
  // L = {z2 = k (z1 - a1)}; U_a sends it to {w2 = sqrt(1-|a1|^2) k w1}.
  const double k_sq = std::norm(line.direction()[1] / d1);
  const double m = std::abs(a1);
  if (m >= 1.0 - 1e-12) return HyperbolicCircle(a1, 1.0 / (1.0 + k_sq));
  return HyperbolicCircle(a1, 1.0 / std::sqrt(1.0 + (1.0 - m * m) * k_sq));
}

// ---------------------------------------------------------------------------

namespace {

CPoint unit_normal_2d(const CPoint& d) { return CPoint{-std::conj(d[1]), std::conj(d[0])}; }

}  // namespace

AxisNormalization::AxisNormalization(const ComplexLine& line)
    : along_(CPoint::zero(2)), dir_(line.direction()), offset_(line.base().norm()), shift_(0.0) {
  if (line.dim() != 2) throw Error(ErrorCode::DimensionMismatch, "axis normalization is for C^2");
  if (offset_ >= 1.0) throw Error(ErrorCode::LineMissesBall, "line does not meet the open ball");
  along_ = offset_ > 1e-14 ? (1.0 / offset_) * line.base() : unit_normal_2d(dir_);
  shift_ = MoebiusMap(offset_);
}

CPoint AxisNormalization::apply(const CPoint& z) const {
  // Unitary coordinates (along, dir) place the line at {y1 = offset}; U_offset moves it to
  // {y1 = 0}; the swap makes that {z2 = 0}.
  const CPoint y = shift_.apply(CPoint{inner(z, along_), inner(z, dir_)});
  return CPoint{y[1], y[0]};
}

CPoint AxisNormalization::invert(const CPoint& w) const {
  const CPoint y = shift_.inverse().apply(CPoint{w[1], w[0]});
  return y[0] * along_ + y[1] * dir_;
}

// ---------------------------------------------------------------------------

CPoint random_unit_vector(std::size_t dim, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<cplx> v(dim);
  double len = 0.0;
  do {
    for (auto& c : v) c = cplx(gauss(rng), gauss(rng));
    len = CPoint(v).norm();
  } while (len < 1e-8);
  for (auto& c : v) c /= len;
  return CPoint(std::move(v));
}

CPoint random_ball_point(std::size_t dim, double radius, Rng& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double r = radius * std::pow(unif(rng), 1.0 / (2.0 * static_cast<double>(dim)));
  return r * random_unit_vector(dim, rng);
}

CPoint random_sphere_point(std::size_t dim, Rng& rng) { return random_unit_vector(dim, rng); }

}  // namespace holext
