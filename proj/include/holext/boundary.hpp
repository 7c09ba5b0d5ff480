#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "holext/geometry.hpp"

namespace holext {

using MultiIndex = std::vector<unsigned>;

/// c * z^alpha * conj(z)^beta
struct Monomial {
  cplx coeff;
  MultiIndex alpha;
  MultiIndex beta;
};

/// Finite sum of monomials in z and conj(z). Kept canonical: terms sorted by (alpha, beta),
/// no repeated exponent pair, no zero coefficient.
class MonomialSum {
 public:
  explicit MonomialSum(std::size_t dim);
  MonomialSum(std::size_t dim, std::vector<Monomial> terms);

  static MonomialSum constant(std::size_t dim, cplx c);
  static MonomialSum coordinate(std::size_t dim, std::size_t j);       // z_j
  static MonomialSum conj_coordinate(std::size_t dim, std::size_t j);  // conj(z_j)

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Monomial>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  bool is_holomorphic() const noexcept;
  unsigned degree() const noexcept;

  /// Evaluation anywhere in C^n (no sphere constraint).
  cplx operator()(const CPoint& z) const;

  MonomialSum& operator+=(const MonomialSum& other);
  MonomialSum& operator*=(cplx s);
  friend MonomialSum operator+(MonomialSum a, const MonomialSum& b) { return a += b; }
  friend MonomialSum operator-(MonomialSum a, MonomialSum b) { return a += (b *= -1.0); }
  friend MonomialSum operator*(cplx s, MonomialSum a) { return a *= s; }
  friend MonomialSum operator*(const MonomialSum& a, const MonomialSum& b);
  MonomialSum pow(unsigned k) const;

 private:
  void canonicalize();

  std::size_t dim_;
  std::vector<Monomial> terms_;
  std::vector<unsigned> max_exp_;      // per coordinate, max over alpha and beta
  std::vector<std::size_t> offsets_;   // power-table layout derived from max_exp_
};

/// numerator / denominator, evaluated with a guard on the denominator magnitude.
struct RationalSphereFunction {
  MonomialSum numerator;
  MonomialSum denominator;
};

enum class Smoothness { RealAnalytic, FiniteSmoothness, Unknown };

std::string_view to_string(Smoothness s) noexcept;

struct BlackBoxSampler {
  std::function<cplx(const CPoint&)> sample;
  std::size_t dim;
};

/// A function on the unit sphere of C^n.
class BoundaryFunction {
 public:
  using Rep = std::variant<MonomialSum, RationalSphereFunction, BlackBoxSampler>;

  BoundaryFunction(MonomialSum f, std::string label = {});
  BoundaryFunction(RationalSphereFunction f, Smoothness smoothness, std::string label = {});
  BoundaryFunction(BlackBoxSampler f, Smoothness smoothness, std::string label = {});

  const Rep& rep() const noexcept { return rep_; }
  std::size_t dim() const noexcept;
  Smoothness smoothness() const noexcept { return smoothness_; }
  const std::string& label() const noexcept { return label_; }
  const MonomialSum* as_monomials() const noexcept { return std::get_if<MonomialSum>(&rep_); }

  /// Evaluation without the on-sphere precondition.
  cplx evaluate(const CPoint& z) const;

 private:
  Rep rep_;
  Smoothness smoothness_;
  std::string label_;
};

/// Value of f at a point of the unit sphere; ||z| - 1| <= 1e-10 is required.
cplx eval(const BoundaryFunction& f, const CPoint& z);

/// |z1|^2: constant on every circle L cap dB^n with 0 in L.
BoundaryFunction example_counterexample(std::size_t dim = 2);
/// z2^k / conj(z2), equal on the sphere to z2^{k+1} / (1 - |z1|^2).
BoundaryFunction example_globevnik(unsigned k);

/// z -> f(z1, e^{i phi} z2).
BoundaryFunction rotate_z2(const BoundaryFunction& f, double phi);

/// Lines "c_re c_im | a_1 ... a_n | b_1 ... b_n"; blank lines and '#' comments are skipped.
MonomialSum parse_monomial_text(std::string_view text);
std::string to_monomial_text(const MonomialSum& f);

}  // namespace holext
