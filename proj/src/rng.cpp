#include "symm/rng.hpp"

#include <cmath>

namespace symm {

uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

SplitMix64 substream(uint64_t seed, uint64_t a, uint64_t b) {
  uint64_t h = seed;
  h = mix64(h ^ (0x9E3779B97F4A7C15ull * (a + 1)));
  h = mix64(h ^ (0xC2B2AE3D27D4EB4Full * (b + 1)));
  return SplitMix64(h);
}

std::string dist_name(Dist d) {
  switch (d) {
    case Dist::gauss: return "gauss";
    case Dist::rademacher: return "rademacher";
    case Dist::heavy_tail: return "heavy_tail";
  }
  return "gauss";
}

std::optional<Dist> dist_from_name(const std::string& name) {
  if (name == "gauss") return Dist::gauss;
  if (name == "rademacher") return Dist::rademacher;
  if (name == "heavy_tail") return Dist::heavy_tail;
  return std::nullopt;
}

double draw(SplitMix64& rng, Dist dist) {
  switch (dist) {
    case Dist::gauss: {
      double u1 = rng.next_unit_pos();
      double u2 = rng.next_unit();
      return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }
    case Dist::rademacher:
      return (rng.next() & 1ull) ? 1.0 : -1.0;
    case Dist::heavy_tail: {
      // strictly inside (0,1) so tan stays finite
      double u = (static_cast<double>(rng.next() >> 12) + 0.5) * 0x1.0p-52;
      return std::tan(M_PI * (u - 0.5));
    }
  }
  return 0.0;
}

}  // namespace symm
