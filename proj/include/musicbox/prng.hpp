#pragma once

#include <cstdint>
#include <limits>

#include "musicbox/errors.hpp"

namespace musicbox {

// splitmix64 (Vigna's fixed-increment SplittableRandom). The generator is
// pinned so that a seed fully determines every generated phrase, across
// platforms and reimplementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform draw over [0, n-1] by rejection: a raw draw z is accepted iff
  // z < 2^64 - (2^64 mod n), otherwise redrawn.
  std::uint64_t uniform(std::uint64_t n) {
    if (n == 0) throw ArgumentError("uniform draw over an empty range");
    const std::uint64_t residue = (0 - n) % n;  // 2^64 mod n
    const std::uint64_t max_accepted = std::numeric_limits<std::uint64_t>::max() - residue;
    std::uint64_t z = next();
    while (z > max_accepted) z = next();
    return z % n;
  }

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

}  // namespace musicbox
