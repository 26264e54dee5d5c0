#pragma once

#include <cstdint>

namespace voroto {

/// Deterministic 64-bit generator (splitmix64). Used everywhere randomness is
/// needed so that artifacts are reproducible bit-for-bit from a seed, on any
/// platform. Not suitable for cryptography.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 bits of precision.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  /// Unbiased integer in [0, n) via rejection.
  std::uint64_t next_below(std::uint64_t n) {
    const std::uint64_t threshold = -n % n;
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  /// Independent stream for (seed, index) pairs: sample i of a run seeded s
  /// always sees the same stream, regardless of worker count or order.
  static Rng stream(std::uint64_t seed, std::uint64_t index) {
    Rng mixer(seed);
    const std::uint64_t a = mixer.next_u64();
    Rng mixer2(index + 0x632be59bd9b4e019ULL);
    return Rng(a ^ mixer2.next_u64());
  }

 private:
  std::uint64_t state_;
};

}  // namespace voroto
