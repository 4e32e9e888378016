#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "zakharov/field.hpp"

namespace zakharov::fft {
namespace {

// FFTW planning is not thread-safe; execution with the new-array interface is.
class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(std::size_t n, int sign) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto key = std::make_pair(n, sign);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    auto* in = fftw_alloc_complex(n);
    auto* out = fftw_alloc_complex(n);
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), in, out, sign,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(in);
    fftw_free(out);
    if (plan == nullptr) throw std::runtime_error("fftw: planning failed");
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

fftw_complex* as_fftw(const Complex* p) {
  return reinterpret_cast<fftw_complex*>(const_cast<Complex*>(p));
}

void check(std::span<const Complex> in, std::span<Complex> out) {
  if (in.size() != out.size()) throw std::invalid_argument("fft: size mismatch");
  if (in.data() == out.data()) throw std::invalid_argument("fft: in-place transform");
}

}  // namespace

void forward(std::span<const Complex> physical, std::span<Complex> spectral) {
  check(physical, spectral);
  const std::size_t n = physical.size();
  fftw_execute_dft(cache().get(n, FFTW_FORWARD), as_fftw(physical.data()),
                   as_fftw(spectral.data()));
  // Grid starts at -L/2, which contributes (-1)^k per mode.
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    spectral[k] *= (k % 2 == 0) ? scale : -scale;
  }
}

void backward(std::span<const Complex> spectral, std::span<Complex> physical) {
  check(spectral, physical);
  const std::size_t n = spectral.size();
  thread_local std::vector<Complex> shifted;
  shifted.assign(spectral.begin(), spectral.end());
  for (std::size_t k = 1; k < n; k += 2) shifted[k] = -shifted[k];
  fftw_execute_dft(cache().get(n, FFTW_BACKWARD), as_fftw(shifted.data()),
                   as_fftw(physical.data()));
}

}  // namespace zakharov::fft
