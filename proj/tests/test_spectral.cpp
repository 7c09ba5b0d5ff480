#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "holext/boundary.hpp"
#include "holext/errors.hpp"
#include "holext/spectral.hpp"

using namespace holext;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

const MonomialSum z1 = MonomialSum::coordinate(2, 0);
const MonomialSum z2 = MonomialSum::coordinate(2, 1);
const MonomialSum w1 = MonomialSum::conj_coordinate(2, 0);
const MonomialSum w2 = MonomialSum::conj_coordinate(2, 1);

GridSpec small_grid() {
  GridSpec g;
  g.n_radial = 5;
  g.n_angular = 16;
  g.n_phi = 64;
  return g;
}

}  // namespace

TEST_CASE("fourier_slice examples") {
  const BoundaryFunction fz2(z2);
  CHECK(std::abs(fourier_slice(fz2, 1, 0.6) - 0.8) < 1e-14);
  CHECK(std::abs(f_nu(fz2, 1, 0.6) - 1.0) < 1e-14);

  const BoundaryFunction a(z1 * w1);
  CHECK(std::abs(fourier_slice(a, 0, 0.6) - 0.36) < 1e-14);
  for (int nu : {-3, -1, 1, 2}) CHECK(std::abs(fourier_slice(a, nu, 0.6)) < 1e-14);

  const BoundaryFunction c(w2);
  CHECK(std::abs(fourier_slice(c, -1, 0.6) - 0.8) < 1e-14);
  CHECK(std::abs(f_nu(c, -1, 0.6) - 0.64) < 1e-14);
  CHECK(std::abs(f_nu(c, -1, 0.0) - 1.0) < 1e-14);
}

TEST_CASE("f_nu examples") {
  const auto g = example_globevnik(2);
  CHECK(std::abs(f_nu(g, 3, 0.5) - 4.0 / 3.0) < 1e-12);

  const BoundaryFunction p(z1 * z2 + z1.pow(2));
  const cplx t{0.3, -0.4};
  CHECK(std::abs(f_nu(p, 0, t) - t * t) < 1e-14);
  CHECK(std::abs(f_nu(p, 1, t) - t) < 1e-14);
  for (int nu : {-2, -1, 2, 3}) CHECK(std::abs(f_nu(p, nu, t)) < 1e-14);
}

TEST_CASE("slice preconditions") {
  const BoundaryFunction f(z2);
  CHECK(code_of([&] { fourier_slice(f, 1, 0.5, 4); }) == ErrorCode::BandwidthTooSmall);
  CHECK(code_of([&] { fourier_slice(f, 1, 0.5, 12); }) == ErrorCode::BandwidthTooSmall);
  CHECK(code_of([&] { fourier_slice(f, 1, 0.97); }) == ErrorCode::OutsideSliceDisc);
  CHECK(code_of([&] { fourier_slice(BoundaryFunction(MonomialSum::coordinate(3, 1)), 1, 0.5); }) ==
        ErrorCode::DimensionMismatch);
}

TEST_CASE("build_slice examples") {
  const auto grid = small_grid();
  const auto s1 = build_slice(BoundaryFunction(z2), 1, grid);
  for (const auto& v : s1.F) CHECK(std::abs(v - 1.0) < 1e-12);
  CHECK(s1.psi_spread <= 1e-12);

  const auto s0 = build_slice(BoundaryFunction(z1 * w1), 0, grid);
  for (std::size_t i = 0; i < s0.radii.size(); ++i)
    for (std::size_t j = 0; j < s0.angles.size(); ++j)
      CHECK(std::abs(s0.f_at(i, j) - s0.radii[i] * s0.radii[i]) < 1e-12);
  CHECK(s0.psi_spread <= 1e-12);
}

TEST_CASE("build_slice is linear") {
  const auto grid = small_grid();
  const MonomialSum f = z1 * z2 + cplx(0.0, 2.0) * w2 * z1;
  const MonomialSum g = z2.pow(2) * w1 - 3.0 * z1;
  const cplx a{0.7, 0.2};
  for (int nu = -2; nu <= 2; ++nu) {
    const auto sf = build_slice(BoundaryFunction(f), nu, grid);
    const auto sg = build_slice(BoundaryFunction(g), nu, grid);
    const auto sh = build_slice(BoundaryFunction(f + a * g), nu, grid);
    for (std::size_t k = 0; k < sh.F.size(); ++k) CHECK(std::abs(sh.F[k] - (sf.F[k] + a * sg.F[k])) < 1e-12);
  }
}

TEST_CASE("vanishing order examples") {
  const auto e1 = vanishing_order(BoundaryFunction(w2), -1);
  CHECK(e1.k == 1);
  CHECK(e1.exponent == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(vanishing_order(BoundaryFunction(z2), 1).k == 0);
  CHECK(vanishing_order(BoundaryFunction(w2.pow(2)), -2).k == 2);
  CHECK(code_of([] { vanishing_order(BoundaryFunction(z2), 2); }) == ErrorCode::SliceIsZero);
}

TEST_CASE("negative modes of real-analytic inputs vanish on the boundary") {
  const MonomialSum f = w2 * z1 + w2.pow(3) + cplx(0.5, 0.5) * w2.pow(2) * w1 + z2;
  for (int nu : {-1, -2, -3}) {
    const auto e = vanishing_order(BoundaryFunction(f), nu);
    CHECK(e.k >= 1);
  }
}

TEST_CASE("Globevnik slice grows like an inverse power") {
  const auto e = vanishing_order(example_globevnik(2), 3);
  CHECK(std::abs(e.exponent + 1.0) <= 0.05);
  CHECK(e.k == -1);
}

TEST_CASE("rotation equivariance") {
  const auto grid = small_grid();
  const BoundaryFunction f(z1 * z2 + w2.pow(2) + cplx(0.0, 1.0) * z2.pow(3) * w1);
  const double phi = 0.9;
  const auto rf = rotate_z2(f, phi);
  for (int nu = -3; nu <= 3; ++nu) {
    const auto s = build_slice(f, nu, grid);
    const auto r = build_slice(rf, nu, grid);
    const cplx ph = std::polar(1.0, nu * phi);
    for (std::size_t k = 0; k < s.A.size(); ++k) CHECK(std::abs(r.A[k] - ph * s.A[k]) < 1e-12);
  }
}

TEST_CASE("partial sums reproduce the function") {
  const MonomialSum m = z1 * z2 + w2.pow(2) * z1 + cplx(0.3, -0.1) * z2.pow(3) + w1 * z2 - 2.0 * MonomialSum::constant(2, 1.0);
  const BoundaryFunction f(m);
  const int B = 3;
  Rng rng(17);
  int tested = 0;
  while (tested < 200) {
    const CPoint z = random_sphere_point(2, rng);
    if (std::abs(z[0]) > kDefaultRMax) continue;
    const auto modes = slice_modes(f, z[0], B, 64);
    cplx sum = 0.0;
    for (int nu = -B; nu <= B; ++nu) sum += modes.f(nu) * std::pow(z[1], nu);
    CHECK(std::abs(sum - eval(f, z)) < 1e-10);
    ++tested;
  }
}

TEST_CASE("slice CSV export") {
  const auto grid = small_grid();
  const auto slices = build_slices(BoundaryFunction(z2), 0, 1, grid);
  const std::string csv = slices_to_csv(slices);
  std::istringstream is(csv);
  std::string header;
  std::getline(is, header);
  CHECK(header == "nu,r,t,re_A,im_A,re_F,im_F");
  std::size_t rows = 0;
  for (std::string line; std::getline(is, line);) ++rows;
  CHECK(rows == 2 * grid.n_radial * grid.n_angular);
}
