#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "types.hpp"

namespace haptex {

// Symmetric Hann window of length n: w[i] = 0.5 * (1 - cos(2*pi*i/(n-1))).
std::vector<double> hann_window(std::size_t n);

// Collapses the two lateral force axes into one friction series. Energy
// preserving per bin: |Z[k]|^2 = |X[k]|^2 + |Y[k]|^2, phase taken from the
// channel with the larger magnitude in that bin (x on ties).
std::vector<double> combine_lateral(std::span<const double> fx,
                                    std::span<const double> fy);

// Maximal runs where |signal| exceeds the global mean of |signal|. Runs
// shorter than min_len samples are dropped as noise. A constant signal has no
// crossings and yields an empty list.
std::vector<SweepSegment> detect_sweeps(std::span<const double> signal,
                                        std::size_t min_len = 400);

// Hann-windowed slice of window_len samples centered on the segment midpoint.
// Returns nullopt when the window would overrun the signal bounds.
std::optional<Frame> extract_frame(std::span<const double> signal,
                                   const SweepSegment& segment,
                                   std::size_t window_len = kDefaultWindowLen);

// Per-bin arithmetic mean of the frames' one-sided amplitude spectra.
// All frames must share length and window_sum.
MagnitudeSpectrum average_spectra(const std::vector<Frame>& frames,
                                  double sample_rate_hz);

// Zeroes bins strictly outside [low_hz, high_hz] and records the band.
MagnitudeSpectrum bandpass(MagnitudeSpectrum spec, double low_hz = kDefaultBandLowHz,
                           double high_hz = kDefaultBandHighHz);

// Divides each in-band bin by the response gain, linearly interpolated onto
// the bin grid. The response grid must cover the active band.
MagnitudeSpectrum compensate(MagnitudeSpectrum spec, const FrequencyResponse& response);

// Linear interpolation of the response onto an arbitrary frequency, clamped
// to the end gains outside the grid.
double interpolate_gain(const FrequencyResponse& response, double freq_hz);

struct PreprocessConfig {
  double band_low_hz = kDefaultBandLowHz;
  double band_high_hz = kDefaultBandHighHz;
  std::size_t window_len = kDefaultWindowLen;
  std::size_t min_sweep_len = 400;
};

struct PreprocessInfo {
  std::size_t sweeps_detected = 0;
  std::size_t frames_used = 0;
  std::size_t frames_skipped = 0;  // windows that would overrun the signal
};

// Full pipeline: combine -> detect -> window -> FFT average -> bandpass
// [-> compensate]. Throws ErrorCode::empty when no usable sweep exists.
MagnitudeSpectrum preprocess(const FrictionRecording& recording,
                             const PreprocessConfig& config,
                             const FrequencyResponse* response = nullptr,
                             PreprocessInfo* info = nullptr);

}  // namespace haptex
