#pragma once

#include <cstdint>
#include <random>

namespace fg {

std::uint64_t mix64(std::uint64_t x);

// Seeded deterministic RNG. Raw 64-bit output comes from std::mt19937_64,
// whose output sequence is pinned by the standard, and bounded draws use
// rejection sampling instead of std::uniform_int_distribution, so every
// draw is bit-identical across standard libraries and platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(mix64(seed)) {}

  // Stream derived from (seed, index). Samplers take one stream per sample
  // so aggregate results do not depend on iteration or scheduling order.
  static Rng stream(std::uint64_t seed, std::uint64_t index) {
    return Rng(mix64(seed) ^ mix64(index * 0x9E3779B97F4A7C15ull + 1));
  }

  std::uint64_t next() { return gen_(); }

  // Uniform in [0, bound); bound must be nonzero.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t x = next();
      if (x >= threshold) return x % bound;
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace fg
