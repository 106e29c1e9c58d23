#include "tvclust/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <mutex>
#include <stdexcept>

namespace tvclust::detail {

namespace {

// FFTW planning is not thread-safe and FFTW_ESTIMATE plans are cheap, so all
// transforms share one mutex and a per-(size, sign) plan cache with dedicated
// aligned buffers.  Copy-in/copy-out is negligible next to the transform.
struct PlanEntry {
  fftw_plan plan = nullptr;
  fftw_complex* in = nullptr;
  fftw_complex* out = nullptr;
};

std::mutex g_mutex;
std::map<std::pair<std::size_t, int>, PlanEntry>& plan_cache() {
  static std::map<std::pair<std::size_t, int>, PlanEntry> cache;
  return cache;
}

}  // namespace

void dft(std::vector<std::complex<double>>& data, int sign) {
  if (data.empty()) throw std::invalid_argument("dft: empty input");
  if (sign != 1 && sign != -1) throw std::invalid_argument("dft: sign must be +/-1");
  const std::size_t n = data.size();

  std::lock_guard<std::mutex> lock(g_mutex);
  auto& entry = plan_cache()[{n, sign}];
  if (entry.plan == nullptr) {
    entry.in = fftw_alloc_complex(n);
    entry.out = fftw_alloc_complex(n);
    entry.plan = fftw_plan_dft_1d(static_cast<int>(n), entry.in, entry.out,
                                  sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
    if (entry.plan == nullptr) throw std::runtime_error("dft: fftw plan creation failed");
  }
  // std::complex<double> is guaranteed array-compatible with double[2].
  std::memcpy(entry.in, reinterpret_cast<const double*>(data.data()),
              n * sizeof(fftw_complex));
  fftw_execute(entry.plan);
  std::memcpy(reinterpret_cast<double*>(data.data()), entry.out, n * sizeof(fftw_complex));
}

}  // namespace tvclust::detail
