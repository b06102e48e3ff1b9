#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

#include "error.hpp"

namespace haptex {

namespace {

// fftw_plan creation is not thread-safe; guard the cache. FFTW_UNALIGNED lets
// the cached plan execute on any std::vector buffer via the new-array API.
std::mutex g_plan_mutex;

fftw_plan plan_for(std::size_t n, int sign) {
  static std::map<std::pair<std::size_t, int>, fftw_plan> cache;
  std::lock_guard<std::mutex> lock(g_plan_mutex);
  auto it = cache.find({n, sign});
  if (it != cache.end()) return it->second;

  std::vector<std::complex<double>> scratch(n);
  fftw_plan p = fftw_plan_dft_1d(
      static_cast<int>(n), reinterpret_cast<fftw_complex*>(scratch.data()),
      reinterpret_cast<fftw_complex*>(scratch.data()), sign,
      FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (!p) fail(ErrorCode::numeric, "fft: plan creation failed");
  cache.emplace(std::make_pair(n, sign), p);
  return p;
}

cvec transform(const cvec& in, int sign) {
  if (in.empty()) fail(ErrorCode::invalid_arg, "fft: empty input");
  cvec out(in.size());
  cvec tmp(in);  // out-of-place via copy; execute_dft may clobber input
  fftw_plan p = plan_for(in.size(), sign);
  fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(tmp.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
  return out;
}

}  // namespace

cvec fft(const cvec& in) { return transform(in, FFTW_FORWARD); }

cvec ifft(const cvec& in) { return transform(in, FFTW_BACKWARD); }

cvec fft_real(const std::vector<double>& in) {
  cvec c(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) c[i] = in[i];
  return fft(c);
}

std::vector<double> ifft_real(const cvec& spectrum) {
  const cvec t = ifft(spectrum);
  std::vector<double> out(t.size());
  const double inv_n = 1.0 / static_cast<double>(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = t[i].real() * inv_n;
  return out;
}

void hermitian_complete(cvec& spectrum) {
  const std::size_t n = spectrum.size();
  if (n == 0) return;
  spectrum[0] = spectrum[0].real();
  if (n % 2 == 0) spectrum[n / 2] = spectrum[n / 2].real();
  for (std::size_t k = 1; k < (n + 1) / 2; ++k) {
    spectrum[n - k] = std::conj(spectrum[k]);
  }
}

}  // namespace haptex
