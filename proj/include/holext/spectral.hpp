#pragma once

#include <span>
#include <string>
#include <vector>

#include "holext/boundary.hpp"

namespace holext {

/// Fourier decomposition in the z2 angle. On dB^2 write z2 = |z2| e^{i psi}; then
///   f(z1, z2) = sum_nu A_nu(z1) e^{i nu psi} = sum_nu F_nu(z1) z2^nu,
///   F_nu(z1) = A_nu(z1) / (1 - |z1|^2)^{nu/2}.

inline constexpr double kDefaultRMax = 0.95;
inline constexpr std::size_t kDefaultNPhi = 512;

/// All modes |nu| <= max_nu at one z1, from a single DFT of f(z1, e^{i phi} |z2|).
struct SliceModes {
  cplx z1;
  int max_nu;
  std::vector<cplx> A;  // index nu + max_nu

  cplx a(int nu) const { return A.at(static_cast<std::size_t>(nu + max_nu)); }
  cplx f(int nu) const;
};

SliceModes slice_modes(const BoundaryFunction& f, cplx z1, int max_nu, std::size_t n_phi = kDefaultNPhi,
                       double r_max = kDefaultRMax);

/// A_nu(z1), by the equispaced rule with n_phi >= 4(|nu|+1) nodes (a power of two).
cplx fourier_slice(const BoundaryFunction& f, int nu, cplx z1, std::size_t n_phi = kDefaultNPhi,
                   double r_max = kDefaultRMax);
/// F_nu(z1).
cplx f_nu(const BoundaryFunction& f, int nu, cplx z1, std::size_t n_phi = kDefaultNPhi,
          double r_max = kDefaultRMax);

/// Polar grid of the z1 disc: radii r_max * i / n_radial (i = 1..n_radial), equispaced angles.
struct GridSpec {
  double r_max = kDefaultRMax;
  std::size_t n_radial = 8;
  std::size_t n_angular = 64;
  std::size_t n_phi = kDefaultNPhi;

  std::vector<double> radii() const;
  std::vector<double> angles() const;
};

struct FourierSlice {
  int nu;
  std::vector<double> radii;
  std::vector<double> angles;
  std::size_t n_phi;
  std::vector<cplx> A;  // row-major, radius index first
  std::vector<cplx> F;
  /// max |A_nu e^{i nu psi} computed at psi = 1| - |same at psi = 0| on the outer ring;
  /// zero up to roundoff since A_nu does not depend on psi.
  double psi_spread = 0.0;

  cplx a_at(std::size_t i, std::size_t j) const { return A[i * angles.size() + j]; }
  cplx f_at(std::size_t i, std::size_t j) const { return F[i * angles.size() + j]; }
  std::span<const cplx> f_ring(std::size_t i) const {
    return std::span<const cplx>(F).subspan(i * angles.size(), angles.size());
  }
  double max_abs_f() const;
};

FourierSlice build_slice(const BoundaryFunction& f, int nu, const GridSpec& grid = {});
/// Slices for every nu in [nu_min, nu_max] sharing one DFT per node.
std::vector<FourierSlice> build_slices(const BoundaryFunction& f, int nu_min, int nu_max, const GridSpec& grid = {});

struct VanishingOrderEstimate {
  int nu;
  int k;            // rounded exponent
  double exponent;  // fitted exponent of (1 - |z1|^2)
  double residual;  // |exponent - k|
};

/// Two-radius log-ratio fit of max_t |F_nu(r e^{it})| against (1 - r^2).
VanishingOrderEstimate vanishing_order(const BoundaryFunction& f, int nu, double r_a = 0.9, double r_b = 0.95,
                                       std::size_t n_angular = 64, std::size_t n_phi = kDefaultNPhi);
/// Same fit from the ring maxima already in hand.
VanishingOrderEstimate vanishing_order_from_maxima(int nu, double r_a, double max_a, double r_b, double max_b);

/// CSV with header "nu,r,t,re_A,im_A,re_F,im_F".
std::string slices_to_csv(std::span<const FourierSlice> slices);

}  // namespace holext
