#include "transform.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <vector>

namespace geoflow::detail {
namespace {

struct PlanKey {
  int dimension;
  int points;
  int direction;
  auto operator<=>(const PlanKey&) const = default;
};

// FFTW plan execution is thread-safe, plan creation is not; the cache is
// guarded and plans live for the lifetime of the process.  Plans are created
// with FFTW_UNALIGNED so they may run on any std::vector storage through the
// new-array interface.
fftw_plan lookup_plan(const GridSpec& spec, int direction) {
  static std::mutex mutex;
  static std::map<PlanKey, fftw_plan> cache;

  const PlanKey key{spec.dimension(), spec.points_per_axis(), direction};
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::vector<std::complex<double>> scratch(spec.total_points());
  auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  const int m = spec.points_per_axis();
  fftw_plan plan = spec.dimension() == 1 ? fftw_plan_dft_1d(m, buf, buf, direction, flags)
                                         : fftw_plan_dft_2d(m, m, buf, buf, direction, flags);
  cache.emplace(key, plan);
  return plan;
}

}  // namespace

void fft(const GridSpec& spec, std::complex<double>* data, int sign) {
  // FFTW_FORWARD == -1 and FFTW_BACKWARD == +1, matching our sign convention.
  fftw_plan plan = lookup_plan(spec, sign);
  auto* buf = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(plan, buf, buf);
  if (sign == -1) {
    const double scale = 1.0 / static_cast<double>(spec.total_points());
    const std::size_t n = spec.total_points();
    for (std::size_t i = 0; i < n; ++i) data[i] *= scale;
  }
}

}  // namespace geoflow::detail
