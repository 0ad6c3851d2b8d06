#pragma once

#include <cstdint>
#include <vector>

namespace submax {

// splitmix64 finalizer. Used everywhere randomness must be reproducible
// across platforms and languages; <random> distributions are
// implementation-defined and would break byte-identical reruns.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4bec5ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Counter-based key derivation: independent value per (seed, index).
inline std::uint64_t keyed_bits(std::uint64_t seed, std::uint64_t index) {
  return mix64(mix64(seed) + 0x9e3779b97f4a7c15ULL * (index + 1));
}

// Maps 64 bits to the open interval (0,1): (m + 0.5) / 2^53 with m < 2^53.
inline double unit_open(std::uint64_t bits) {
  return (static_cast<double>(bits >> 11) + 0.5) * (1.0 / 9007199254740992.0);
}

class SplitMix {
 public:
  explicit SplitMix(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4bec5ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound); bound > 0. Rejection-free multiply-shift would
  // bias for huge bounds; plain modulo is fine for the bounds used here
  // (all far below 2^32) and keeps the sequence easy to reproduce.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  int index(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

  double uniform01() { return unit_open(next()); }

 private:
  std::uint64_t state_;
};

inline void shuffle_in_place(std::vector<int>& values, SplitMix& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    std::size_t j = rng.below(i);
    std::swap(values[i - 1], values[j]);
  }
}

}  // namespace submax
