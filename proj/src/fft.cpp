#include "fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <mutex>

namespace wavepack::detail {

namespace {
// FFTW's planner is not re-entrant; execution of distinct plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

void dft_forward(std::vector<std::complex<double>>& data) {
  const int n = static_cast<int>(data.size());
  if (n == 0) return;
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_dft_1d(n, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  std::lock_guard<std::mutex> lock(planner_mutex());
  fftw_destroy_plan(plan);
}

void dft_forward(std::vector<CQ>& data) {
  const int n = static_cast<int>(data.size());
  if (n == 0) return;
  auto* buf = static_cast<fftwq_complex*>(fftwq_malloc(sizeof(fftwq_complex) * n));
  for (int i = 0; i < n; ++i) {
    buf[i][0] = data[i].real().backend().value();
    buf[i][1] = data[i].imag().backend().value();
  }
  fftwq_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftwq_plan_dft_1d(n, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
  }
  fftwq_execute(plan);
  for (int i = 0; i < n; ++i) data[i] = CQ(Q(buf[i][0]), Q(buf[i][1]));
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftwq_destroy_plan(plan);
  }
  fftwq_free(buf);
}

}  // namespace wavepack::detail
