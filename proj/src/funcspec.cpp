#include "holext/funcspec.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "holext/errors.hpp"

namespace holext {

namespace {

[[noreturn]] void parse_fail(std::string_view what, std::string_view text) {
  throw Error(ErrorCode::ParseError, std::string(what) + ": '" + std::string(text) + "'");
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

// Reads an unsigned decimal number (no sign) at pos; returns false if none.
bool read_real(const std::string& s, std::size_t& pos, double& out) {
  if (pos >= s.size() || !(std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.')) return false;
  const char* begin = s.c_str() + pos;
  char* end = nullptr;
  out = std::strtod(begin, &end);
  if (end == begin) return false;
  pos += static_cast<std::size_t>(end - begin);
  return true;
}

// One signed real or imaginary part: [+-] (number [i] | i).
bool read_part(const std::string& s, std::size_t& pos, cplx& out) {
  double sign = 1.0;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    sign = s[pos] == '-' ? -1.0 : 1.0;
    ++pos;
  }
  double v = 1.0;
  const bool has_number = read_real(s, pos, v);
  if (pos < s.size() && s[pos] == 'i') {
    ++pos;
    out = cplx(0.0, sign * v);
    return true;
  }
  if (!has_number) return false;
  out = cplx(sign * v, 0.0);
  return true;
}

class ExprParser {
 public:
  ExprParser(std::string text, std::size_t dim) : s_(std::move(text)), dim_(dim) {
    s_.erase(std::remove_if(s_.begin(), s_.end(), [](unsigned char c) { return std::isspace(c); }), s_.end());
  }

  struct Factor {
    cplx coeff = 1.0;
    std::vector<std::pair<std::size_t, unsigned>> z, zbar;  // (index, power)
  };

  MonomialSum parse() {
    if (s_.empty()) parse_fail("empty function expression", s_);
    std::vector<Factor> terms;
    bool first = true;
    while (pos_ < s_.size() || first) {
      double sign = 1.0;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
        sign = s_[pos_] == '-' ? -1.0 : 1.0;
        ++pos_;
      } else if (!first) {
        parse_fail("expected '+' or '-'", s_);
      }
      first = false;
      Factor t = term();
      t.coeff *= sign;
      terms.push_back(std::move(t));
    }
    MonomialSum out(dim_);
    for (const auto& t : terms) {
      Monomial m{t.coeff, MultiIndex(dim_, 0), MultiIndex(dim_, 0)};
      for (auto [j, p] : t.z) m.alpha[j] += p;
      for (auto [j, p] : t.zbar) m.beta[j] += p;
      out += MonomialSum(dim_, {m});
    }
    return out;
  }

  std::size_t dim() const { return dim_; }

 private:
  Factor term() {
    Factor t;
    factor(t);
    while (pos_ < s_.size() && s_[pos_] == '*') {
      ++pos_;
      factor(t);
    }
    return t;
  }

  unsigned exponent() {
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) parse_fail("expected an integer exponent", s_);
      return static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start)));
    }
    return 1;
  }

  std::size_t variable() {
    if (pos_ >= s_.size() || s_[pos_] != 'z') parse_fail("expected a variable zj", s_);
    ++pos_;
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) parse_fail("variable needs an index", s_);
    const auto j = std::stoul(s_.substr(start, pos_ - start));
    if (j == 0) parse_fail("variables are numbered from z1", s_);
    dim_ = std::max<std::size_t>(dim_, j);
    return j - 1;
  }

  bool consume(std::string_view tok) {
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void factor(Factor& t) {
    if (consume("conj(")) {
      const auto j = variable();
      if (!consume(")")) parse_fail("expected ')'", s_);
      t.zbar.emplace_back(j, exponent());
    } else if (consume("conj-")) {
      const auto j = variable();
      t.zbar.emplace_back(j, exponent());
    } else if (consume("|")) {
      const auto j = variable();
      if (!consume("|^2")) parse_fail("only |zj|^2 is supported", s_);
      t.z.emplace_back(j, 1);
      t.zbar.emplace_back(j, 1);
    } else if (pos_ < s_.size() && s_[pos_] == 'z') {
      const auto j = variable();
      t.z.emplace_back(j, exponent());
    } else if (consume("(")) {
      const auto close = s_.find(')', pos_);
      if (close == std::string::npos) parse_fail("unbalanced '('", s_);
      t.coeff *= parse_complex(s_.substr(pos_, close - pos_));
      pos_ = close + 1;
    } else {
      cplx v;
      if (!read_part_unsigned(v)) parse_fail("unexpected token", s_.substr(pos_));
      t.coeff *= v;
    }
  }

  bool read_part_unsigned(cplx& out) {
    if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) return false;
    return read_part(s_, pos_, out);
  }

  std::string s_;
  std::size_t dim_;
  std::size_t pos_ = 0;
};

}  // namespace

cplx parse_complex(std::string_view text) {
  const std::string s = [&] {
    std::string t = trim(text);
    t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }), t.end());
    return t;
  }();
  if (s.empty()) parse_fail("empty complex number", text);
  std::size_t pos = 0;
  cplx first;
  if (!read_part(s, pos, first)) parse_fail("bad complex number", text);
  if (pos == s.size()) return first;
  cplx second;
  if (first.imag() != 0.0 || !read_part(s, pos, second) || second.real() != 0.0 || pos != s.size())
    parse_fail("bad complex number", text);
  return first + second;
}

CPoint parse_point(std::string_view text, std::size_t dim) {
  std::vector<cplx> coords;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    coords.push_back(parse_complex(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (coords.size() < 2) parse_fail("a point needs at least two coordinates", text);
  if (dim != 0 && coords.size() != dim)
    parse_fail("point must have " + std::to_string(dim) + " coordinates", text);
  return CPoint(std::move(coords));
}

BoundaryFunction parse_function(std::string_view spec_in, std::size_t dim) {
  const std::string spec = trim(spec_in);
  if (spec.empty()) parse_fail("empty function spec", spec_in);
  if (spec == "counterexample") return example_counterexample(std::max<std::size_t>(dim, 2));
  if (spec.rfind("globevnik:", 0) == 0) {
    const std::string k = spec.substr(10);
    if (k.empty() || !std::all_of(k.begin(), k.end(), [](unsigned char c) { return std::isdigit(c); }))
      parse_fail("globevnik needs a nonnegative integer order", spec);
    return example_globevnik(static_cast<unsigned>(std::stoul(k)));
  }
  if (spec == "globevnik") return example_globevnik(2);
  if (spec[0] == '@') {
    std::ifstream in(spec.substr(1));
    if (!in) parse_fail("cannot open monomial file", spec.substr(1));
    std::stringstream buf;
    buf << in.rdbuf();
    return BoundaryFunction(parse_monomial_text(buf.str()), spec.substr(1));
  }
  ExprParser p(spec, std::max<std::size_t>(dim, 2));
  MonomialSum m = p.parse();
  if (m.dim() != p.dim()) m = MonomialSum(p.dim(), m.terms());
  return BoundaryFunction(std::move(m), spec);
}

}  // namespace holext
