#include "holext/boundary.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "holext/errors.hpp"

namespace holext {

namespace {

bool exponent_less(const Monomial& x, const Monomial& y) {
  if (x.alpha != y.alpha) return x.alpha < y.alpha;
  return x.beta < y.beta;
}

bool same_exponents(const Monomial& x, const Monomial& y) {
  return x.alpha == y.alpha && x.beta == y.beta;
}

}  // namespace

MonomialSum::MonomialSum(std::size_t dim) : dim_(dim), max_exp_(dim, 0), offsets_(dim + 1, 0) {
  if (dim < 2) throw Error(ErrorCode::DimensionMismatch, "functions on the sphere need n >= 2");
  for (std::size_t j = 0; j < dim_; ++j) offsets_[j + 1] = offsets_[j] + 2;
}

MonomialSum::MonomialSum(std::size_t dim, std::vector<Monomial> terms) : MonomialSum(dim) {
  for (const auto& t : terms) {
    if (t.alpha.size() != dim || t.beta.size() != dim)
      throw Error(ErrorCode::DimensionMismatch, "multi-index length differs from dimension");
  }
  terms_ = std::move(terms);
  canonicalize();
}

MonomialSum MonomialSum::constant(std::size_t dim, cplx c) {
  return MonomialSum(dim, {Monomial{c, MultiIndex(dim, 0), MultiIndex(dim, 0)}});
}

MonomialSum MonomialSum::coordinate(std::size_t dim, std::size_t j) {
  MultiIndex alpha(dim, 0);
  alpha.at(j) = 1;
  return MonomialSum(dim, {Monomial{1.0, alpha, MultiIndex(dim, 0)}});
}

MonomialSum MonomialSum::conj_coordinate(std::size_t dim, std::size_t j) {
  MultiIndex beta(dim, 0);
  beta.at(j) = 1;
  return MonomialSum(dim, {Monomial{1.0, MultiIndex(dim, 0), beta}});
}

void MonomialSum::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), exponent_less);
  std::vector<Monomial> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && same_exponents(merged.back(), t)) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Monomial& t) { return t.coeff == cplx(0.0); });
  terms_ = std::move(merged);
  std::fill(max_exp_.begin(), max_exp_.end(), 0u);
  for (const auto& t : terms_) {
    for (std::size_t j = 0; j < dim_; ++j) max_exp_[j] = std::max({max_exp_[j], t.alpha[j], t.beta[j]});
  }
  for (std::size_t j = 0; j < dim_; ++j) offsets_[j + 1] = offsets_[j] + 2 * (max_exp_[j] + 1);
}

bool MonomialSum::is_holomorphic() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(), [](const Monomial& t) {
    return std::all_of(t.beta.begin(), t.beta.end(), [](unsigned b) { return b == 0; });
  });
}

unsigned MonomialSum::degree() const noexcept {
  unsigned deg = 0;
  for (const auto& t : terms_) {
    unsigned d = 0;
    for (std::size_t j = 0; j < dim_; ++j) d += t.alpha[j] + t.beta[j];
    deg = std::max(deg, d);
  }
  return deg;
}

cplx MonomialSum::operator()(const CPoint& z) const {
  if (z.dim() != dim_) throw Error(ErrorCode::DimensionMismatch, "point dimension differs from function");
  thread_local std::vector<cplx> powers;
  const auto& offset = offsets_;
  if (powers.size() < offset[dim_]) powers.resize(offset[dim_]);
  for (std::size_t j = 0; j < dim_; ++j) {
    cplx* zp = powers.data() + offset[j];
    cplx* cp = zp + max_exp_[j] + 1;
    zp[0] = 1.0;
    cp[0] = 1.0;
    const cplx zc = std::conj(z[j]);
    for (unsigned e = 1; e <= max_exp_[j]; ++e) {
      zp[e] = zp[e - 1] * z[j];
      cp[e] = cp[e - 1] * zc;
    }
  }
  cplx sum = 0.0;
  for (const auto& t : terms_) {
    cplx term = t.coeff;
    for (std::size_t j = 0; j < dim_; ++j) {
      const cplx* zp = powers.data() + offset[j];
      if (t.alpha[j] != 0) term *= zp[t.alpha[j]];
      if (t.beta[j] != 0) term *= zp[max_exp_[j] + 1 + t.beta[j]];
    }
    sum += term;
  }
  return sum;
}

MonomialSum& MonomialSum::operator+=(const MonomialSum& other) {
  if (other.dim_ != dim_) throw Error(ErrorCode::DimensionMismatch, "adding functions of different dimension");
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  canonicalize();
  return *this;
}

MonomialSum& MonomialSum::operator*=(cplx s) {
  for (auto& t : terms_) t.coeff *= s;
  canonicalize();
  return *this;
}

MonomialSum operator*(const MonomialSum& a, const MonomialSum& b) {
  if (a.dim_ != b.dim_) throw Error(ErrorCode::DimensionMismatch, "multiplying functions of different dimension");
  std::vector<Monomial> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      Monomial m{x.coeff * y.coeff, x.alpha, x.beta};
      for (std::size_t j = 0; j < a.dim_; ++j) {
        m.alpha[j] += y.alpha[j];
        m.beta[j] += y.beta[j];
      }
      prod.push_back(std::move(m));
    }
  }
  return MonomialSum(a.dim_, std::move(prod));
}

MonomialSum MonomialSum::pow(unsigned k) const {
  MonomialSum out = constant(dim_, 1.0);
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

// ---------------------------------------------------------------------------

std::string_view to_string(Smoothness s) noexcept {
  switch (s) {
    case Smoothness::RealAnalytic: return "real-analytic";
    case Smoothness::FiniteSmoothness: return "finite-smoothness";
    case Smoothness::Unknown: return "unknown";
  }
  return "unknown";
}

BoundaryFunction::BoundaryFunction(MonomialSum f, std::string label)
    : rep_(std::move(f)), smoothness_(Smoothness::RealAnalytic), label_(std::move(label)) {}

BoundaryFunction::BoundaryFunction(RationalSphereFunction f, Smoothness smoothness, std::string label)
    : rep_(std::move(f)), smoothness_(smoothness), label_(std::move(label)) {
  const auto& r = std::get<RationalSphereFunction>(rep_);
  if (r.numerator.dim() != r.denominator.dim())
    throw Error(ErrorCode::DimensionMismatch, "numerator and denominator dimensions differ");
}

BoundaryFunction::BoundaryFunction(BlackBoxSampler f, Smoothness smoothness, std::string label)
    : rep_(std::move(f)), smoothness_(smoothness), label_(std::move(label)) {
  const auto& s = std::get<BlackBoxSampler>(rep_);
  if (!s.sample) throw Error(ErrorCode::InvalidArgument, "black-box sampler is empty");
  if (s.dim < 2) throw Error(ErrorCode::DimensionMismatch, "functions on the sphere need n >= 2");
}

std::size_t BoundaryFunction::dim() const noexcept {
  return std::visit(
      [](const auto& r) -> std::size_t {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, MonomialSum>) return r.dim();
        else if constexpr (std::is_same_v<T, RationalSphereFunction>) return r.numerator.dim();
        else return r.dim;
      },
      rep_);
}

cplx BoundaryFunction::evaluate(const CPoint& z) const {
  return std::visit(
      [&z](const auto& r) -> cplx {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, MonomialSum>) {
          return r(z);
        } else if constexpr (std::is_same_v<T, RationalSphereFunction>) {
          const cplx d = r.denominator(z);
          if (std::abs(d) < 1e-9) throw Error(ErrorCode::DenominatorVanishes, "denominator below 1e-9");
          return r.numerator(z) / d;
        } else {
          if (z.dim() != r.dim) throw Error(ErrorCode::DimensionMismatch, "point dimension differs from function");
          return r.sample(z);
        }
      },
      rep_);
}

cplx eval(const BoundaryFunction& f, const CPoint& z) {
  if (std::abs(z.norm() - 1.0) > 1e-10) throw Error(ErrorCode::NotOnSphere, "point is not on the unit sphere");
  return f.evaluate(z);
}

BoundaryFunction example_counterexample(std::size_t dim) {
  MultiIndex e(dim, 0);
  e[0] = 1;
  return BoundaryFunction(MonomialSum(dim, {Monomial{1.0, e, e}}), "|z1|^2");
}

BoundaryFunction example_globevnik(unsigned k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "Globevnik example needs k >= 1");
  RationalSphereFunction r{MonomialSum(2, {Monomial{1.0, {0, k}, {0, 0}}}),
                           MonomialSum::conj_coordinate(2, 1)};
  return BoundaryFunction(std::move(r), Smoothness::FiniteSmoothness,
                          "z2^" + std::to_string(k) + "/conj(z2)");
}

namespace {

MonomialSum rotate_monomials(const MonomialSum& f, double phi) {
  std::vector<Monomial> terms = f.terms();
  for (auto& t : terms) {
    const double charge = static_cast<double>(t.alpha[1]) - static_cast<double>(t.beta[1]);
    t.coeff *= std::polar(1.0, charge * phi);
  }
  return MonomialSum(f.dim(), std::move(terms));
}

}  // namespace

BoundaryFunction rotate_z2(const BoundaryFunction& f, double phi) {
  if (f.dim() != 2) throw Error(ErrorCode::DimensionMismatch, "rotation in z2 is defined for n = 2");
  return std::visit(
      [&](const auto& r) -> BoundaryFunction {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, MonomialSum>) {
          return BoundaryFunction(rotate_monomials(r, phi), f.label());
        } else if constexpr (std::is_same_v<T, RationalSphereFunction>) {
          return BoundaryFunction(RationalSphereFunction{rotate_monomials(r.numerator, phi),
                                                         rotate_monomials(r.denominator, phi)},
                                  f.smoothness(), f.label());
        } else {
          const cplx rot = std::polar(1.0, phi);
          auto inner_fn = r.sample;
          BlackBoxSampler s{[inner_fn, rot](const CPoint& z) { return inner_fn(CPoint{z[0], rot * z[1]}); }, 2};
          return BoundaryFunction(std::move(s), f.smoothness(), f.label());
        }
      },
      f.rep());
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string> words(std::string_view s) {
  std::istringstream is{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

double parse_double(const std::string& w, std::size_t line_no) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
  if (ec != std::errc() || ptr != w.data() + w.size())
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad number '" + w + "'");
  return v;
}

MultiIndex parse_index(std::string_view field, std::size_t line_no) {
  MultiIndex out;
  for (const auto& w : words(field)) {
    unsigned v = 0;
    const auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
    if (ec != std::errc() || ptr != w.data() + w.size())
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad exponent '" + w + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

MonomialSum parse_monomial_text(std::string_view text) {
  std::vector<Monomial> terms;
  std::size_t dim = 0;
  std::size_t line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (words(line).empty()) continue;
    const auto fields = split(line, '|');
    if (fields.size() != 3)
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected 'c_re c_im | alpha | beta'");
    const auto c = words(fields[0]);
    if (c.size() != 2)
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": coefficient needs re and im");
    Monomial m{cplx(parse_double(c[0], line_no), parse_double(c[1], line_no)), parse_index(fields[1], line_no),
               parse_index(fields[2], line_no)};
    if (m.alpha.size() != m.beta.size() || m.alpha.size() < 2)
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": multi-index lengths differ or n < 2");
    if (dim == 0) dim = m.alpha.size();
    if (m.alpha.size() != dim)
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": inconsistent dimension");
    terms.push_back(std::move(m));
  }
  if (dim == 0) throw Error(ErrorCode::ParseError, "no monomial terms found");
  return MonomialSum(dim, std::move(terms));
}

std::string to_monomial_text(const MonomialSum& f) {
  std::ostringstream os;
  os << std::setprecision(17);
  if (f.empty()) {
    os << "0 0 |";
    for (std::size_t j = 0; j < f.dim(); ++j) os << " 0";
    os << " |";
    for (std::size_t j = 0; j < f.dim(); ++j) os << " 0";
    os << '\n';
  }
  for (const auto& t : f.terms()) {
    os << t.coeff.real() << ' ' << t.coeff.imag() << " |";
    for (unsigned a : t.alpha) os << ' ' << a;
    os << " |";
    for (unsigned b : t.beta) os << ' ' << b;
    os << '\n';
  }
  return os.str();
}

}  // namespace holext
