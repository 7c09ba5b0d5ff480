#include "holext/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "holext/errors.hpp"

namespace holext {

namespace {

void check_bandwidth(int max_nu, std::size_t n_phi) {
  const auto needed = 4 * (static_cast<std::size_t>(std::abs(max_nu)) + 1);
  if (!is_power_of_two(n_phi) || n_phi < needed)
    throw Error(ErrorCode::BandwidthTooSmall, "n_phi = " + std::to_string(n_phi) +
                                                  " must be a power of two >= " + std::to_string(needed));
}

// Modes at psi: samples f(z1, |z2| e^{i(psi + phi_k)}), coefficients rephased by e^{-i nu psi}.
std::vector<cplx> mode_coefficients(const BoundaryFunction& f, cplx z1, std::size_t n_phi, double psi) {
  const double r = std::sqrt(std::max(0.0, 1.0 - std::norm(z1)));
  std::vector<cplx> samples(n_phi);
  for (std::size_t k = 0; k < n_phi; ++k) {
    const double phi = psi + 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n_phi);
    const cplx v = f.evaluate(CPoint{z1, std::polar(r, phi)});
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw Error(ErrorCode::NonFiniteSample, "non-finite boundary value");
    samples[k] = v;
  }
  return dft_coefficients(samples);
}

}  // namespace

cplx SliceModes::f(int nu) const {
  const double r = std::sqrt(1.0 - std::norm(z1));
  return a(nu) / std::pow(r, nu);
}

SliceModes slice_modes(const BoundaryFunction& f, cplx z1, int max_nu, std::size_t n_phi, double r_max) {
  if (f.dim() != 2) throw Error(ErrorCode::DimensionMismatch, "Fourier slices are defined for n = 2");
  if (max_nu < 0) throw Error(ErrorCode::InvalidArgument, "max_nu must be nonnegative");
  if (!(r_max > 0.0 && r_max < 1.0)) throw Error(ErrorCode::InvalidArgument, "r_max must lie in (0, 1)");
  check_bandwidth(max_nu, n_phi);
  if (std::abs(z1) > r_max + 1e-12) throw Error(ErrorCode::OutsideSliceDisc, "|z1| exceeds r_max");
  const auto coeffs = mode_coefficients(f, z1, n_phi, 0.0);
  SliceModes out{z1, max_nu, std::vector<cplx>(static_cast<std::size_t>(2 * max_nu + 1))};
  for (int nu = -max_nu; nu <= max_nu; ++nu) out.A[static_cast<std::size_t>(nu + max_nu)] = coefficient_at(coeffs, nu);
  return out;
}

cplx fourier_slice(const BoundaryFunction& f, int nu, cplx z1, std::size_t n_phi, double r_max) {
  check_bandwidth(nu, n_phi);
  return slice_modes(f, z1, std::abs(nu), n_phi, r_max).a(nu);
}

cplx f_nu(const BoundaryFunction& f, int nu, cplx z1, std::size_t n_phi, double r_max) {
  check_bandwidth(nu, n_phi);
  return slice_modes(f, z1, std::abs(nu), n_phi, r_max).f(nu);
}

// ---------------------------------------------------------------------------

std::vector<double> GridSpec::radii() const {
  std::vector<double> out(n_radial);
  for (std::size_t i = 0; i < n_radial; ++i)
    out[i] = r_max * static_cast<double>(i + 1) / static_cast<double>(n_radial);
  return out;
}

std::vector<double> GridSpec::angles() const {
  std::vector<double> out(n_angular);
  for (std::size_t j = 0; j < n_angular; ++j)
    out[j] = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_angular);
  return out;
}

double FourierSlice::max_abs_f() const {
  double m = 0.0;
  for (const auto& v : F) m = std::max(m, std::abs(v));
  return m;
}

std::vector<FourierSlice> build_slices(const BoundaryFunction& f, int nu_min, int nu_max, const GridSpec& grid) {
  if (nu_min > nu_max) throw Error(ErrorCode::InvalidArgument, "empty nu range");
  if (grid.n_radial == 0 || grid.n_angular == 0) throw Error(ErrorCode::InvalidArgument, "empty grid");
  const int max_nu = std::max(std::abs(nu_min), std::abs(nu_max));
  const auto radii = grid.radii();
  const auto angles = grid.angles();
  std::vector<FourierSlice> slices;
  for (int nu = nu_min; nu <= nu_max; ++nu) {
    slices.push_back(FourierSlice{nu, radii, angles, grid.n_phi, std::vector<cplx>(radii.size() * angles.size()),
                                  std::vector<cplx>(radii.size() * angles.size()), 0.0});
  }
  for (std::size_t i = 0; i < radii.size(); ++i) {
    for (std::size_t j = 0; j < angles.size(); ++j) {
      const cplx z1 = std::polar(radii[i], angles[j]);
      const SliceModes modes = slice_modes(f, z1, max_nu, grid.n_phi, grid.r_max);
      for (auto& s : slices) {
        s.A[i * angles.size() + j] = modes.a(s.nu);
        s.F[i * angles.size() + j] = modes.f(s.nu);
      }
    }
  }
  // psi-independence on the outer ring
  const std::size_t outer = radii.size() - 1;
  constexpr double psi = 1.0;
  for (std::size_t j = 0; j < angles.size(); ++j) {
    const cplx z1 = std::polar(radii[outer], angles[j]);
    const auto coeffs = mode_coefficients(f, z1, grid.n_phi, psi);
    for (auto& s : slices) {
      const cplx shifted = coefficient_at(coeffs, s.nu) * std::polar(1.0, -s.nu * psi);
      s.psi_spread = std::max(s.psi_spread, std::abs(shifted - s.a_at(outer, j)));
    }
  }
  return slices;
}

FourierSlice build_slice(const BoundaryFunction& f, int nu, const GridSpec& grid) {
  return std::move(build_slices(f, nu, nu, grid).front());
}

// ---------------------------------------------------------------------------

VanishingOrderEstimate vanishing_order_from_maxima(int nu, double r_a, double max_a, double r_b, double max_b) {
  if (!(0.0 < r_a && r_a < r_b && r_b < 1.0)) throw Error(ErrorCode::InvalidArgument, "need 0 < r_a < r_b < 1");
  if (std::max(max_a, max_b) < 1e-12 || max_a <= 0.0 || max_b <= 0.0)
    throw Error(ErrorCode::SliceIsZero, "F_" + std::to_string(nu) + " vanishes on both rings");
  const double exponent = std::log(max_b / max_a) / std::log((1.0 - r_b * r_b) / (1.0 - r_a * r_a));
  const double k = std::round(exponent);
  return VanishingOrderEstimate{nu, static_cast<int>(k), exponent, std::abs(exponent - k)};
}

VanishingOrderEstimate vanishing_order(const BoundaryFunction& f, int nu, double r_a, double r_b,
                                       std::size_t n_angular, std::size_t n_phi) {
  auto ring_max = [&](double r) {
    double m = 0.0;
    for (std::size_t j = 0; j < n_angular; ++j) {
      const cplx z1 = std::polar(r, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_angular));
      m = std::max(m, std::abs(f_nu(f, nu, z1, n_phi, std::max(r_b, kDefaultRMax))));
    }
    return m;
  };
  if (!(0.0 < r_a && r_a < r_b && r_b < 1.0)) throw Error(ErrorCode::InvalidArgument, "need 0 < r_a < r_b < 1");
  return vanishing_order_from_maxima(nu, r_a, ring_max(r_a), r_b, ring_max(r_b));
}

std::string slices_to_csv(std::span<const FourierSlice> slices) {
  std::ostringstream os;
  os << std::setprecision(17) << "nu,r,t,re_A,im_A,re_F,im_F\n";
  for (const auto& s : slices) {
    for (std::size_t i = 0; i < s.radii.size(); ++i) {
      for (std::size_t j = 0; j < s.angles.size(); ++j) {
        const cplx a = s.a_at(i, j);
        const cplx fv = s.f_at(i, j);
        os << s.nu << ',' << s.radii[i] << ',' << s.angles[j] << ',' << a.real() << ',' << a.imag() << ','
           << fv.real() << ',' << fv.imag() << '\n';
      }
    }
  }
  return os.str();
}

}  // namespace holext
