#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace haptex {

// All stochastic synthesis draws from this generator. mt19937_64 is specified
// bit-exactly by the standard; the distributions below are written out by hand
// because std::normal_distribution & friends are implementation-defined and
// would break cross-platform reproducibility.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller. One value per call; the sine twin is
  // discarded to keep the stream layout simple.
  double gaussian() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  // Uniform phase in [0, 2pi).
  double phase() { return 6.283185307179586476925286766559 * uniform(); }

  std::uint64_t next_u64() { return engine_(); }

private:
  std::mt19937_64 engine_;
};

namespace detail {
inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}
}  // namespace detail

// Stable per-stage sub-seed: independent streams for "synth", "render", ...
// derived from one master seed. Must stay identical across platforms and
// versions, hence FNV-1a + splitmix instead of std::hash.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view stage) {
  return detail::splitmix64(master ^ detail::fnv1a64(stage));
}

}  // namespace haptex
