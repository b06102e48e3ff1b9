#include "signal_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "error.hpp"
#include "fft.hpp"

namespace haptex {

std::vector<double> hann_window(std::size_t n) {
  if (n == 0) fail(ErrorCode::invalid_arg, "hann_window: zero length");
  std::vector<double> w(n, 1.0);
  if (n == 1) return w;
  const double step = 2.0 * std::numbers::pi / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = 0.5 * (1.0 - std::cos(step * static_cast<double>(i)));
  }
  return w;
}

std::vector<double> combine_lateral(std::span<const double> fx,
                                    std::span<const double> fy) {
  if (fx.size() != fy.size()) {
    fail(ErrorCode::invalid_arg, "combine_lateral: channel length mismatch");
  }
  if (fx.empty()) fail(ErrorCode::invalid_arg, "combine_lateral: empty channels");

  const cvec sx = fft_real(std::vector<double>(fx.begin(), fx.end()));
  const cvec sy = fft_real(std::vector<double>(fy.begin(), fy.end()));

  // Magnitude choice is symmetric in k, so the combined spectrum stays
  // Hermitian and the inverse transform is real.
  cvec combined(sx.size());
  for (std::size_t k = 0; k < sx.size(); ++k) {
    const double ax = std::abs(sx[k]);
    const double ay = std::abs(sy[k]);
    const double mag = std::hypot(ax, ay);
    const std::complex<double> ref = (ax >= ay) ? sx[k] : sy[k];
    const double ref_abs = std::abs(ref);
    combined[k] = (ref_abs > 0.0) ? ref * (mag / ref_abs)
                                  : std::complex<double>(mag, 0.0);
  }
  return ifft_real(combined);
}

std::vector<SweepSegment> detect_sweeps(std::span<const double> signal,
                                        std::size_t min_len) {
  if (signal.empty()) fail(ErrorCode::invalid_arg, "detect_sweeps: empty signal");

  double mean_abs = 0.0;
  for (double v : signal) mean_abs += std::abs(v);
  mean_abs /= static_cast<double>(signal.size());

  std::vector<SweepSegment> segments;
  std::size_t run_start = 0;
  bool in_run = false;
  for (std::size_t i = 0; i <= signal.size(); ++i) {
    const bool above = i < signal.size() && std::abs(signal[i]) > mean_abs;
    if (above && !in_run) {
      run_start = i;
      in_run = true;
    } else if (!above && in_run) {
      in_run = false;
      const std::size_t len = i - run_start;
      if (len >= std::max<std::size_t>(min_len, 2)) {
        SweepSegment seg;
        seg.start = run_start;
        seg.end = i - 1;
        seg.center = (seg.start + seg.end) / 2;
        segments.push_back(seg);
      }
    }
  }
  return segments;
}

std::optional<Frame> extract_frame(std::span<const double> signal,
                                   const SweepSegment& segment,
                                   std::size_t window_len) {
  if (window_len == 0 || window_len > signal.size()) return std::nullopt;
  const std::size_t half = window_len / 2;
  if (segment.center < half) return std::nullopt;
  const std::size_t start = segment.center - half;
  if (start + window_len > signal.size()) return std::nullopt;

  const std::vector<double> w = hann_window(window_len);
  Frame frame;
  frame.samples.resize(window_len);
  frame.window_sum = 0.0;
  for (std::size_t i = 0; i < window_len; ++i) {
    frame.samples[i] = signal[start + i] * w[i];
    frame.window_sum += w[i];
  }
  return frame;
}

MagnitudeSpectrum average_spectra(const std::vector<Frame>& frames,
                                  double sample_rate_hz) {
  if (frames.empty()) fail(ErrorCode::invalid_arg, "average_spectra: no frames");
  if (sample_rate_hz <= 0.0) {
    fail(ErrorCode::invalid_arg, "average_spectra: sample rate must be positive");
  }
  const std::size_t n = frames.front().samples.size();
  if (n < 2 || n % 2 != 0) {
    fail(ErrorCode::invalid_arg, "average_spectra: frame length must be even and >= 2");
  }
  const double wsum = frames.front().window_sum;
  for (const Frame& f : frames) {
    if (f.samples.size() != n || std::abs(f.window_sum - wsum) > 1e-9 * std::abs(wsum)) {
      fail(ErrorCode::invalid_arg, "average_spectra: frames differ in length or window");
    }
  }
  if (wsum <= 0.0) fail(ErrorCode::invalid_arg, "average_spectra: non-positive window sum");

  const std::size_t n_bins = n / 2 + 1;
  MagnitudeSpectrum spec;
  spec.bin_hz = sample_rate_hz / static_cast<double>(n);
  spec.magnitudes.assign(n_bins, 0.0);
  spec.band_low_hz = 0.0;
  spec.band_high_hz = sample_rate_hz / 2.0;

  for (const Frame& f : frames) {
    const cvec x = fft_real(f.samples);
    for (std::size_t k = 0; k < n_bins; ++k) {
      // One-sided amplitude: interior bins carry both halves of the energy.
      const double scale = (k == 0 || k == n / 2) ? 1.0 : 2.0;
      spec.magnitudes[k] += scale * std::abs(x[k]) / wsum;
    }
  }
  const double inv = 1.0 / static_cast<double>(frames.size());
  for (double& m : spec.magnitudes) m *= inv;
  return spec;
}

MagnitudeSpectrum bandpass(MagnitudeSpectrum spec, double low_hz, double high_hz) {
  if (!(low_hz < high_hz)) fail(ErrorCode::invalid_arg, "bandpass: low >= high");
  if (high_hz > spec.nyquist_hz() + 1e-9) {
    fail(ErrorCode::invalid_arg, "bandpass: high edge above Nyquist");
  }
  for (std::size_t k = 0; k < spec.size(); ++k) {
    const double f = spec.freq_at(k);
    if (f < low_hz - 1e-9 || f > high_hz + 1e-9) spec.magnitudes[k] = 0.0;
  }
  spec.band_low_hz = low_hz;
  spec.band_high_hz = high_hz;
  return spec;
}

double interpolate_gain(const FrequencyResponse& response, double freq_hz) {
  const auto& fs = response.freqs_hz;
  const auto& gs = response.gains;
  auto it = std::lower_bound(fs.begin(), fs.end(), freq_hz);
  if (it == fs.begin()) return gs.front();
  if (it == fs.end()) return gs.back();
  const std::size_t hi = static_cast<std::size_t>(it - fs.begin());
  const std::size_t lo = hi - 1;
  const double t = (freq_hz - fs[lo]) / (fs[hi] - fs[lo]);
  return gs[lo] + t * (gs[hi] - gs[lo]);
}

MagnitudeSpectrum compensate(MagnitudeSpectrum spec, const FrequencyResponse& response) {
  if (response.freqs_hz.size() < 2 || response.freqs_hz.size() != response.gains.size()) {
    fail(ErrorCode::invalid_arg, "compensate: response needs >= 2 (freq, gain) points");
  }
  if (!std::is_sorted(response.freqs_hz.begin(), response.freqs_hz.end())) {
    fail(ErrorCode::invalid_arg, "compensate: response frequencies must ascend");
  }
  if (response.freqs_hz.front() > spec.band_low_hz + 1e-9 ||
      response.freqs_hz.back() < spec.band_high_hz - 1e-9) {
    fail(ErrorCode::invalid_arg, "compensate: response grid does not cover the active band");
  }
  for (double g : response.gains) {
    if (!(g > 0.0)) fail(ErrorCode::invalid_arg, "compensate: response gains must be positive");
  }
  for (std::size_t k = 0; k < spec.size(); ++k) {
    const double f = spec.freq_at(k);
    if (f < spec.band_low_hz - 1e-9 || f > spec.band_high_hz + 1e-9) continue;
    spec.magnitudes[k] /= interpolate_gain(response, f);
  }
  return spec;
}

MagnitudeSpectrum preprocess(const FrictionRecording& recording,
                             const PreprocessConfig& config,
                             const FrequencyResponse* response,
                             PreprocessInfo* info) {
  if (recording.sample_rate_hz <= 0.0) {
    fail(ErrorCode::invalid_arg, "preprocess: sample rate must be positive");
  }
  if (recording.fx.empty()) fail(ErrorCode::invalid_arg, "preprocess: empty recording");
  if (!recording.fy.empty() && recording.fy.size() != recording.fx.size()) {
    fail(ErrorCode::invalid_arg, "preprocess: channel length mismatch");
  }
  if (recording.fx.size() < config.window_len) {
    fail(ErrorCode::empty, "preprocess: recording shorter than one window");
  }

  // Single-channel recordings are already a friction series.
  const std::vector<double> friction =
      recording.fy.empty() ? recording.fx
                           : combine_lateral(recording.fx, recording.fy);

  const std::vector<SweepSegment> sweeps =
      detect_sweeps(friction, config.min_sweep_len);
  std::vector<Frame> frames;
  std::size_t skipped = 0;
  for (const SweepSegment& seg : sweeps) {
    if (auto frame = extract_frame(friction, seg, config.window_len)) {
      frames.push_back(std::move(*frame));
    } else {
      ++skipped;
    }
  }
  if (info) {
    info->sweeps_detected = sweeps.size();
    info->frames_used = frames.size();
    info->frames_skipped = skipped;
  }
  if (frames.empty()) fail(ErrorCode::empty, "preprocess: no sweeps detected");

  MagnitudeSpectrum spec = average_spectra(frames, recording.sample_rate_hz);
  spec = bandpass(std::move(spec), config.band_low_hz, config.band_high_hz);
  if (response) spec = compensate(std::move(spec), *response);
  return spec;
}

}  // namespace haptex
