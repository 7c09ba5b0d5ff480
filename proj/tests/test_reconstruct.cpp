#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "holext/boundary.hpp"
#include "holext/errors.hpp"
#include "holext/reconstruct.hpp"

using namespace holext;

namespace {

const MonomialSum z1 = MonomialSum::coordinate(2, 0);
const MonomialSum z2 = MonomialSum::coordinate(2, 1);
const MonomialSum w1 = MonomialSum::conj_coordinate(2, 0);

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

MonomialSum coord3(std::size_t j) { return MonomialSum::coordinate(3, j); }

std::vector<HyperbolicCircle> centered_family(cplx a) {
  std::vector<HyperbolicCircle> out;
  for (double r : {0.2, 0.35, 0.5, 0.65, 0.8}) out.emplace_back(a, r);
  return out;
}

}  // namespace

TEST_CASE("taylor_coeffs examples") {
  GridSpec grid;
  grid.n_phi = 64;
  const auto f1 = taylor_coeffs(build_slice(BoundaryFunction(z2), 1, grid), 6);
  CHECK(std::abs(f1.c[0] - 1.0) <= 1e-12);
  for (int mu = 1; mu <= 6; ++mu) CHECK(std::abs(f1.c[static_cast<std::size_t>(mu)]) <= 1e-12);

  const auto f0 = taylor_coeffs(build_slice(BoundaryFunction(z1.pow(2)), 0, grid), 6);
  CHECK(std::abs(f0.c[2] - 1.0) <= 1e-12);
  CHECK(std::abs(f0.c[0]) <= 1e-12);

  const auto radial = build_slice(BoundaryFunction(z1 * w1), 0, grid);
  CHECK(code_of([&] { taylor_coeffs(radial, 6); }) == ErrorCode::RadialInconsistency);
}

TEST_CASE("assemble_extension examples") {
  const auto m = assemble_extension(BoundaryFunction(z1 * z2 + z1.pow(2)));
  CHECK(std::abs(m.coeff(1, 1) - 1.0) <= 1e-12);
  CHECK(std::abs(m.coeff(0, 2) - 1.0) <= 1e-12);
  CHECK(m.boundary_error <= 1e-9);
  CHECK(m.boundary_points == 500);
  for (int nu = 0; nu <= m.V; ++nu)
    for (int mu = 0; mu <= m.M; ++mu)
      if (!((nu == 1 && mu == 1) || (nu == 0 && mu == 2))) CHECK(std::abs(m.coeff(nu, mu)) <= 1e-10);

  const auto c = assemble_extension(BoundaryFunction(MonomialSum::constant(2, 3.0)));
  CHECK(std::abs(c.coeff(0, 0) - 3.0) <= 1e-12);
  for (std::size_t k = 1; k < c.coeffs.size(); ++k) CHECK(std::abs(c.coeffs[k]) <= 1e-12);
}

TEST_CASE("assemble_extension round trip") {
  Rng rng(12);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<Monomial> terms;
    std::vector<cplx> gen(16);
    for (unsigned nu = 0; nu <= 3; ++nu)
      for (unsigned mu = 0; mu <= 3; ++mu) {
        const cplx c{gauss(rng), gauss(rng)};
        gen[nu * 4 + mu] = c;
        terms.push_back(Monomial{c, {mu, nu}, {0, 0}});
      }
    const auto m = assemble_extension(BoundaryFunction(MonomialSum(2, std::move(terms))));
    for (int nu = 0; nu <= 3; ++nu)
      for (int mu = 0; mu <= 3; ++mu)
        CHECK(std::abs(m.coeff(nu, mu) - gen[static_cast<std::size_t>(nu * 4 + mu)]) <= 1e-9);
  }
}

TEST_CASE("assemble_extension rejects non-holomorphic slices") {
  CHECK(code_of([] { assemble_extension(example_counterexample()); }) == ErrorCode::RadialInconsistency);
}

TEST_CASE("eval_extension") {
  const MonomialSum p = z1 * z2 + z1.pow(2);
  const auto m = assemble_extension(BoundaryFunction(p));
  const CPoint z{cplx(0.3, 0.1), 0.2};
  const cplx expect = cplx(0.3, 0.1) * 0.2 + cplx(0.3, 0.1) * cplx(0.3, 0.1);
  CHECK(std::abs(eval_extension(m, z) - expect) <= 1e-13);
  CHECK(code_of([&] { eval_extension(m, CPoint{1.0, 0.5}); }) == ErrorCode::InvalidArgument);

  Rng rng(2);
  for (int i = 0; i < 50; ++i) {
    const CPoint s = random_sphere_point(2, rng);
    CHECK(std::abs(eval_extension(m, s) - p(s)) <= std::max(m.boundary_error, 1e-12) * 1.0 + 1e-12);
  }

  // Maximum principle on a polar grid of the closed ball.
  double interior = 0.0;
  double boundary = 0.0;
  for (int i = 0; i <= 10; ++i) {
    const double r = i / 10.0;
    for (int j = 0; j < 24; ++j)
      for (int k = 0; k < 24; ++k)
        for (int l = 0; l <= 8; ++l) {
          const double t = std::acos(-1.0) / 2.0 * l / 8.0;
          const CPoint q{std::polar(r * std::cos(t), j * 0.2618), std::polar(r * std::sin(t), k * 0.2618)};
          const double v = std::abs(eval_extension(m, q));
          (i == 10 ? boundary : interior) = std::max(i == 10 ? boundary : interior, v);
        }
  }
  CHECK(interior <= boundary + 1e-12);
}

TEST_CASE("ag_decompose examples") {
  const auto circles = centered_family(cplx(0.3, -0.1));
  SUBCASE("constructed input") {
    const auto F = [](cplx w) { return w * w + 3.0 / (1.0 - std::norm(w)); };
    const auto d = ag_decompose(sample_on_circles(F, circles, 32), 1, 4);
    CHECK(std::abs(d.h[0][2] - 1.0) <= 1e-8);
    CHECK(std::abs(d.h[0][0]) <= 1e-8);
    CHECK(std::abs(d.h[0][1]) <= 1e-8);
    CHECK(std::abs(d.h[1][0] - 3.0) <= 1e-8);
    CHECK(d.max_residual <= 1e-10);
    CHECK(std::abs(d(cplx(0.1, 0.2)) - F(cplx(0.1, 0.2))) <= 1e-9);
  }
  SUBCASE("holomorphic input") {
    const auto F = [](cplx w) { return w * w * w; };
    const auto d = ag_decompose(sample_on_circles(F, circles, 32), 2, 4);
    CHECK(std::abs(d.h[0][3] - 1.0) <= 1e-8);
    for (int j = 1; j <= 2; ++j)
      for (const auto& c : d.h[static_cast<std::size_t>(j)]) CHECK(std::abs(c) <= 1e-7);
  }
  SUBCASE("Globevnik slice") {
    const auto g = example_globevnik(2);
    const auto F = [&](cplx w) { return f_nu(g, 3, w, 64); };
    const auto d = ag_decompose(sample_on_circles(F, circles, 32), 1, 3);
    for (const auto& c : d.h[0]) CHECK(std::abs(c) <= 1e-8);
    CHECK(std::abs(d.h[1][0] - 1.0) <= 1e-8);
  }
}

TEST_CASE("ag_decompose residual is non-increasing in nu and M") {
  const auto circles = centered_family(cplx(0.2, 0.2));
  const auto F = [](cplx w) { return std::exp(std::conj(w)) + w / (1.0 - std::norm(w)); };
  const auto samples = sample_on_circles(F, circles, 32);
  for (int M = 1; M <= 5; ++M) {
    double prev = INFINITY;
    for (int nu = 0; nu <= 3; ++nu) {
      const double r = ag_decompose(samples, nu, M).rms_residual;
      CHECK(r <= prev * (1.0 + 1e-9) + 1e-13);
      prev = r;
    }
  }
  for (int nu = 0; nu <= 3; ++nu) {
    double prev = INFINITY;
    for (int M = 1; M <= 5; ++M) {
      const double r = ag_decompose(samples, nu, M).rms_residual;
      CHECK(r <= prev * (1.0 + 1e-9) + 1e-13);
      prev = r;
    }
  }
}

TEST_CASE("ag_decompose preconditions") {
  const std::vector<HyperbolicCircle> two{HyperbolicCircle(0.0, 0.3), HyperbolicCircle(0.0, 0.6)};
  const auto s = sample_on_circles([](cplx w) { return w; }, two, 16);
  CHECK(code_of([&] { ag_decompose(s, 1, 2); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("cross-section planes") {
  const CPoint a = CPoint::zero(3);
  const CPoint b{0.5, 0.0, 0.0};
  const auto planes = random_planes(a, b, 5, 9);
  REQUIRE(planes.size() == 5);
  for (const auto& q : planes) {
    CHECK(q.distance_to(a) <= 1e-12);
    CHECK(q.distance_to(b) <= 1e-12);
    CHECK(std::abs(inner(q.e1(), q.e1()) - 1.0) <= 1e-14);
    CHECK(std::abs(inner(q.e2(), q.e2()) - 1.0) <= 1e-14);
    CHECK(std::abs(inner(q.e1(), q.e2())) <= 1e-14);
    const CPoint w{0.6, cplx(0.0, 0.8)};
    CHECK(std::abs(q.to_ambient(w).norm() - 1.0) <= 1e-14);
    CHECK(distance(q.to_plane(q.to_ambient(w)), w) <= 1e-14);
  }
  CHECK(code_of([] { CrossSectionPlane(CPoint::zero(3), CPoint{1.0, 0.0, 0.0}, CPoint{1.0, 1.0, 0.0}); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("restrict_to_plane is exact for polynomials") {
  const MonomialSum f = coord3(0) + coord3(1) * coord3(2);
  const BoundaryFunction bf(f);
  const auto planes = random_planes(CPoint::zero(3), CPoint{0.5, 0.0, 0.0}, 5, 4);
  Rng rng(6);
  for (const auto& q : planes) {
    const auto r = restrict_to_plane(bf, q);
    REQUIRE(r.as_monomials() != nullptr);
    CHECK(r.as_monomials()->is_holomorphic());
    for (int i = 0; i < 10; ++i) {
      const CPoint w = random_sphere_point(2, rng);
      CHECK(std::abs(eval(r, w) - f(q.to_ambient(w))) <= 1e-13);
    }
  }
}

TEST_CASE("cross_section_extend examples") {
  const CPoint a = CPoint::zero(3);
  const CPoint b{0.5, 0.0, 0.0};
  const auto planes = random_planes(a, b, 5, 11);

  SUBCASE("z1 + z2 z3") {
    const auto rep = cross_section_extend(BoundaryFunction(coord3(0) + coord3(1) * coord3(2)), a, b, planes);
    CHECK(rep.all_in_A);
    CHECK(rep.origin_on_line);
    CHECK(rep.line_points.size() == 50);
    CHECK(rep.max_disagreement <= 1e-9);
    std::istringstream is(rep.agreement_csv());
    std::string header;
    std::getline(is, header);
    CHECK(header == "plane,point,re_z1,re,im");
  }
  SUBCASE("z1 squared") {
    const auto rep = cross_section_extend(BoundaryFunction(coord3(0).pow(2)), a, b, planes);
    CHECK(rep.all_in_A);
    CHECK(rep.max_disagreement <= 1e-11);
  }
  SUBCASE("|z2|^2 fails in every plane") {
    const MonomialSum f = coord3(1) * MonomialSum::conj_coordinate(3, 1);
    const auto rep = cross_section_extend(BoundaryFunction(f), a, b, planes);
    CHECK_FALSE(rep.all_in_A);
    for (const auto& p : rep.planes) {
      CHECK(p.classification == Classification::NotInA);
      CHECK_FALSE(p.model.has_value());
      CHECK_FALSE(p.failure.empty());
    }
  }
  SUBCASE("plane must contain both points") {
    const std::vector<CrossSectionPlane> off{
        CrossSectionPlane(CPoint{0.0, 0.0, 0.3}, CPoint{1.0, 0.0, 0.0}, CPoint{0.0, 1.0, 0.0})};
    CHECK(code_of([&] { cross_section_extend(BoundaryFunction(coord3(0)), a, b, off); }) ==
          ErrorCode::PlaneMismatch);
  }
}

TEST_CASE("glued extension reproduces a polynomial in the ball") {
  const MonomialSum f = coord3(0) + coord3(1) * coord3(2);
  const GluedExtension E(BoundaryFunction(f), CPoint::zero(3), CPoint{0.5, 0.0, 0.0}, 6, 6);
  Rng rng(13);
  for (int i = 0; i < 20; ++i) {
    const CPoint z = random_ball_point(3, 0.9, rng);
    CHECK(std::abs(E(z) - f(z)) <= 1e-9);
  }
  CHECK(E.planes_built() >= 1);
}

TEST_CASE("forelli_check examples") {
  const auto sq = [](const CPoint& z) { return z[0] * z[0]; };
  const auto a = forelli_check(sq, 2, 20);
  CHECK(a.worst_residual <= 1e-12);
  CHECK(a.verdict == Verdict::Pass);

  const auto rad = [](const CPoint& z) { return cplx(std::norm(z[0])); };
  const auto b = forelli_check(rad, 2, 20);
  CHECK(b.verdict == Verdict::Fail);
  CHECK(b.worst_residual >= 0.1 * b.scale);

  Rng rng(5);
  for (int i = 0; i < 3; ++i) {
    std::normal_distribution<double> gauss;
    const MonomialSum p = cplx(gauss(rng), gauss(rng)) * z1.pow(2) * z2 + cplx(gauss(rng), 0.0) * z2.pow(3) + z1;
    const auto m = assemble_extension(BoundaryFunction(p));
    const auto r = forelli_check(m, 20);
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.worst_residual <= 1e-10);
  }
}
