#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace symm {

/// SplitMix64: a tiny splittable generator with a pure integer state
/// transition, so identical seeds replay the same stream on any platform.
/// Substreams are derived by hashing (seed, stream-id) pairs, which keeps
/// independently scheduled restarts reproducible.
struct SplitMix64 {
  uint64_t state = 0;

  explicit SplitMix64(uint64_t s) : state(s) {}

  uint64_t next() {
    uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in (0, 1].
  double next_unit_pos() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }
};

uint64_t mix64(uint64_t z);

/// Deterministic substream for (seed, a, b).
SplitMix64 substream(uint64_t seed, uint64_t a, uint64_t b = 0);

enum class Dist { gauss, rademacher, heavy_tail };

std::string dist_name(Dist d);
std::optional<Dist> dist_from_name(const std::string& name);

/// One variate: gauss via Box-Muller, rademacher as +-1, heavy_tail as a
/// standard Cauchy.
double draw(SplitMix64& rng, Dist dist);

}  // namespace symm
