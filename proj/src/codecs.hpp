#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "types.hpp"

namespace haptex {

// ---------------------------------------------------------------------------
// Code types. Each one is a complete, self-contained recipe for synthesis.
// ---------------------------------------------------------------------------

// All-pole model y(t) = sum_i coefficients[i] * y(t - i - 1) + noise.
struct ArCode {
  std::vector<double> coefficients;  // size == order
  double noise_gain = 0.0;           // residual standard deviation

  std::size_t order() const { return coefficients.size(); }
};

struct MfccCode {
  std::vector<double> coefficients;  // first n cepstral coefficients
  std::size_t n_mel_filters = 24;
  std::size_t fft_len = kDefaultWindowLen;  // grid the filterbank was built on
};

struct SpectralPeak {
  double freq_hz = 0.0;
  double magnitude = 0.0;
};

struct SpeakCode {
  std::vector<SpectralPeak> peaks;  // ascending frequency, JND-separated
};

struct SbetaCode {
  double alpha = 1.0;
  double beta = 1.0;
};

struct SslopeCode {
  double peak_hz = 0.0;
  int rise_order = 0;  // high-pass order, 20 dB/decade each
  int fall_order = 0;  // low-pass order
};

enum class CodecKind { ar, mfcc, speak, sbeta, sslope };

const char* codec_name(CodecKind kind);
CodecKind codec_from_name(const std::string& name);  // throws on unknown name

using CodeParams = std::variant<ArCode, MfccCode, SpeakCode, SbetaCode, SslopeCode>;

// Tagged texture code; the tag is derived from the payload so it can never
// disagree with it.
struct TextureCode {
  double sample_rate_hz = 0.0;
  CodeParams params;

  CodecKind kind() const { return static_cast<CodecKind>(params.index()); }
};

// Number of scalars a serialized code stores (codec tag and rate excluded):
// ar = order + 1, mfcc = n coefficients, speak = 2 per peak, sbeta = 2,
// sslope = 3.
std::size_t parameter_count(const TextureCode& code);

// ---------------------------------------------------------------------------
// Encoders
// ---------------------------------------------------------------------------

struct ArEstimate {
  ArCode code;
  std::vector<double> pole_radii;  // descending
};

// Burg estimation pooled across frames: forward/backward error products are
// accumulated per stage without crossing frame boundaries, so the reflection
// coefficients stay below one and the model stable.
ArEstimate encode_ar(const std::vector<Frame>& frames, std::size_t order = 6);

// Pole radii of 1 / (1 - sum a_k z^-k); radii < 1 means stable.
std::vector<double> ar_pole_radii(const std::vector<double>& coefficients);

MfccCode encode_mfcc(const MagnitudeSpectrum& spec, std::size_t n_coeffs = 10,
                     std::size_t n_mel_filters = 24);

// Greedy peak picking: local maxima taken in descending magnitude, skipping
// candidates closer than jnd_ratio in relative frequency to a kept peak.
SpeakCode find_peaks_jnd(const MagnitudeSpectrum& spec, double jnd_ratio = 0.12,
                         std::size_t max_peaks = 10);

// Least-squares beta-density fit to (position, magnitude) points, positions
// already normalized to [0, 1]. The amplitude scale is free during the fit
// and discarded afterwards.
struct BetaFit {
  SbetaCode code;
  double residual = 0.0;
  double initial_residual = 0.0;
};
BetaFit fit_beta_points(const std::vector<double>& positions,
                        const std::vector<double>& magnitudes);

// Full sBeta encode: JND peaks -> log-frequency normalization -> simplex fit.
SbetaCode fit_beta(const MagnitudeSpectrum& spec);

// Position of f on the normalized log-frequency axis of [low, high].
double log_band_position(double freq_hz, double low_hz = kDefaultBandLowHz,
                         double high_hz = kDefaultBandHighHz);

// dB-vs-log10(f) line fits on both sides of the spectrum's maximum, rounded
// to the nearest 20 dB/decade. A side with fewer than two bins gets order 0.
SslopeCode estimate_slopes(const MagnitudeSpectrum& spec);

// ---------------------------------------------------------------------------
// Decoders. Deterministic given (code, n_samples, seed); speak ignores the
// seed entirely (zero-phase sum of cosines).
// ---------------------------------------------------------------------------

Signal decode_ar(const ArCode& code, double sample_rate_hz, std::size_t n_samples,
                 std::uint64_t seed);
Signal decode_mfcc(const MfccCode& code, double sample_rate_hz, std::size_t n_samples,
                   std::uint64_t seed);
Signal decode_speak(const SpeakCode& code, double sample_rate_hz, std::size_t n_samples);
Signal decode_sbeta(const SbetaCode& code, double sample_rate_hz, std::size_t n_samples,
                    std::uint64_t seed);
Signal decode_sslope(const SslopeCode& code, double sample_rate_hz, std::size_t n_samples,
                     std::uint64_t seed);

Signal decode(const TextureCode& code, std::size_t n_samples, std::uint64_t seed);

// Spectral envelopes the stochastic decoders shape their noise with; exposed
// for analysis and tests. Unit peak, zero outside [20, 1000] Hz.
double sbeta_envelope(const SbetaCode& code, double freq_hz,
                      double low_hz = kDefaultBandLowHz,
                      double high_hz = kDefaultBandHighHz);
double sslope_envelope(const SslopeCode& code, double freq_hz,
                       double low_hz = kDefaultBandLowHz,
                       double high_hz = kDefaultBandHighHz);

// Mel filterbank weights used by the MFCC codec: n_filters rows over the
// one-sided bins of an fft_len transform at sample_rate_hz, triangles placed
// on the mel scale between low_hz and high_hz.
std::vector<std::vector<double>> mel_filterbank(std::size_t n_filters,
                                                std::size_t fft_len,
                                                double sample_rate_hz,
                                                double low_hz = kDefaultBandLowHz,
                                                double high_hz = kDefaultBandHighHz);

// Validates invariants of a deserialized or hand-built code; throws on
// violation (unstable AR poles, unsorted peaks, non-positive shapes, ...).
void validate(const TextureCode& code);

}  // namespace haptex
