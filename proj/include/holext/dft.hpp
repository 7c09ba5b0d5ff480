#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace holext {

using cplx = std::complex<double>;

bool is_power_of_two(std::size_t n) noexcept;
std::size_t next_power_of_two(std::size_t n) noexcept;

/// Normalized forward DFT: out[m] = (1/N) sum_k in[k] exp(-2 pi i m k / N).
/// Index m >= N/2 holds frequency m - N.
std::vector<cplx> dft_coefficients(std::span<const cplx> samples);

/// Coefficient of frequency `freq` (may be negative) in a normalized DFT result.
inline cplx coefficient_at(std::span<const cplx> coeffs, long freq) {
  const auto n = static_cast<long>(coeffs.size());
  return coeffs[static_cast<std::size_t>(((freq % n) + n) % n)];
}

}  // namespace holext
