#pragma once

// Deterministic random source. All randomness in the library flows through
// this class; the uniform helpers are hand-rolled so a replay depends only
// on the seed and engine, never on the standard library's distribution
// implementations.

#include <cstdint>
#include <random>

namespace evosieve {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, n), n > 0. Rejection over the largest multiple of n.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t cutoff = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t r = next();
      if (r >= cutoff) return r % n;
    }
  }

  // Uniform in [lo, hi], inclusive.
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span =
        static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    return lo + static_cast<std::int64_t>(below(span));
  }

  // Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace evosieve
