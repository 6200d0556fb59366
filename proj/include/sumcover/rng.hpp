#pragma once

#include <cstdint>

namespace sumcover {

// splitmix64. Hand-rolled so that seeded experiment output is identical on
// every platform and standard library; std::uniform_int_distribution gives
// no such guarantee.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound). bound must be positive.
  uint64_t below(uint64_t bound) {
    return static_cast<uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

 private:
  uint64_t state_;
};

// Per-trial sub-seed: seed XOR trial index.
inline uint64_t subseed(uint64_t seed, uint64_t trial_index) {
  return seed ^ trial_index;
}

}  // namespace sumcover
