#pragma once

#include <cstdint>

namespace ladders {

/// Default seed used by the CLI and quick-start docs.
inline constexpr std::uint64_t kDefaultSeed = 0x5eed0ddba11d1ceULL;

/// Identifies one reproducible roll stream: (seed, stream) -> identical
/// roll sequence on any platform.
struct RngSeed {
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t stream = 0;
};

/// SplitMix64 (Steele/Lea/Flood; Vigna's public-domain reference
/// constants). State advances by the 64-bit golden gamma; output is the
/// murmur-style finalizer.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

private:
  std::uint64_t state_;
};

/// Finalizer alone, used to decorrelate stream indices.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Per-game stream: initial state = mix64(seed ^ (golden * (stream + 1))).
inline SplitMix64 make_stream(RngSeed s) {
  return SplitMix64(mix64(s.seed ^ (0x9E3779B97F4A7C15ULL * (s.stream + 1))));
}

/// Die roll in 1..6 by the rejection-free fixed-point multiply
/// (x * 6) >> 64 on the full 64-bit output.
inline int roll_die(SplitMix64& rng) {
  return 1 + static_cast<int>(
                 (static_cast<unsigned __int128>(rng.next()) * 6u) >> 64);
}

}  // namespace ladders
