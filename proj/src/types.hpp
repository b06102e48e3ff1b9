#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace haptex {

// Tactile band used throughout: motion artifacts below, finger attenuation
// above. Configurable per pipeline, these are only the defaults.
inline constexpr double kDefaultBandLowHz = 20.0;
inline constexpr double kDefaultBandHighHz = 1000.0;
inline constexpr std::size_t kDefaultWindowLen = 4000;

struct RecordingMeta {
  double normal_force_n = 0.4;
  double scan_speed_mm_s = 80.0;
  std::string texture_name;
  double contact_angle_deg = 60.0;
};

// Multi-axis force recording. fz may be empty (two-axis sensors).
struct FrictionRecording {
  double sample_rate_hz = 0.0;
  std::vector<double> fx;
  std::vector<double> fy;
  std::vector<double> fz;
  RecordingMeta meta;
};

// Maximal run of rectified signal above the sweep threshold. Indices are
// inclusive; center is the integer midpoint the analysis window lands on.
struct SweepSegment {
  std::size_t start = 0;
  std::size_t end = 0;
  std::size_t center = 0;
};

// Windowed time-domain slice. window_sum is the sum of the applied window's
// samples; spectra use it to report window-corrected amplitudes.
struct Frame {
  std::vector<double> samples;
  double window_sum = 0.0;
};

// One-sided averaged amplitude spectrum on a uniform grid: magnitudes[k] is
// the amplitude at k * bin_hz, window-corrected so a unit cosine at a bin
// center reads 1.0. band_{low,high}_hz describe the active band; bins outside
// it are zero once bandpass() has run.
struct MagnitudeSpectrum {
  double bin_hz = 0.0;
  std::vector<double> magnitudes;
  double band_low_hz = 0.0;
  double band_high_hz = 0.0;

  std::size_t size() const { return magnitudes.size(); }
  double freq_at(std::size_t k) const { return static_cast<double>(k) * bin_hz; }
  double nyquist_hz() const { return freq_at(magnitudes.empty() ? 0 : magnitudes.size() - 1); }
  // Underlying FFT length (even by construction: n bins = len/2 + 1).
  std::size_t fft_len() const { return magnitudes.size() < 2 ? 0 : 2 * (magnitudes.size() - 1); }
  double sample_rate_hz() const { return bin_hz * static_cast<double>(fft_len()); }
};

// Linear-magnitude transfer gain on an ascending frequency grid.
struct FrequencyResponse {
  std::vector<double> freqs_hz;
  std::vector<double> gains;
};

// Time-domain signal with its rate; the unit depends on provenance (newtons
// for recordings, arbitrary for synthesized textures, volts for drives).
struct Signal {
  double sample_rate_hz = 0.0;
  std::vector<double> samples;
};

}  // namespace haptex
