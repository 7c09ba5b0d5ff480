#include "holext/dft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

#include "holext/errors.hpp"

namespace holext {

namespace {

// Planning is not thread-safe in FFTW; execution with the new-array interface is.
class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [n, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(int n) {
    std::lock_guard lock(mutex_);
    auto it = plans_.find(n);
    if (it != plans_.end()) return it->second;
    std::vector<cplx> in(static_cast<std::size_t>(n)), out(static_cast<std::size_t>(n));
    fftw_plan plan = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(in.data()),
                                      reinterpret_cast<fftw_complex*>(out.data()), FFTW_FORWARD,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans_.emplace(n, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<int, fftw_plan> plans_;
};

PlanCache& plan_cache() {
  static PlanCache cache;
  return cache;
}

}  // namespace

bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_power_of_two(std::size_t n) noexcept {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

std::vector<cplx> dft_coefficients(std::span<const cplx> samples) {
  if (samples.empty()) throw Error(ErrorCode::InvalidArgument, "empty sample set");
  const int n = static_cast<int>(samples.size());
  std::vector<cplx> in(samples.begin(), samples.end());
  std::vector<cplx> out(samples.size());
  fftw_execute_dft(plan_cache().get(n), reinterpret_cast<fftw_complex*>(in.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
  const double inv = 1.0 / n;
  for (auto& c : out) c *= inv;
  return out;
}

}  // namespace holext
