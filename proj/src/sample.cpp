#include "fg/sample.hpp"

#include <cassert>
#include <stdexcept>

namespace fg {

std::uint64_t mix64(std::uint64_t x) {
  // splitmix64 finalizer
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

BigInt count_freely_reduced(Rank rank, std::size_t n) {
  if (n == 0) return 1;
  const unsigned q = static_cast<unsigned>(rank.alphabet_size() - 1);
  return BigInt(rank.alphabet_size()) *
         boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(n - 1));
}

BigInt uniform_below(const BigInt& bound, Rng& rng) {
  if (bound <= 0) throw std::invalid_argument("uniform_below: bound must be positive");
  if (bound == 1) return 0;
  const std::size_t bits = boost::multiprecision::msb(bound) + 1;
  for (;;) {
    BigInt x = 0;
    std::size_t remaining = bits;
    while (remaining >= 64) {
      x <<= 64;
      x |= rng.next();
      remaining -= 64;
    }
    if (remaining > 0) {
      x <<= remaining;
      x |= rng.next() >> (64 - remaining);
    }
    if (x < bound) return x;
  }
}

namespace {

// The i-th letter (vertex order) among the 2r-1 letters excluding `skip`.
Letter letter_skipping(int pick, Letter skip) {
  const int v = pick < skip.vertex() ? pick : pick + 1;
  return Letter::from_vertex(v);
}

}  // namespace

Word sample_freely_reduced(Rank rank, std::size_t n, Rng& rng) {
  std::vector<Letter> ls;
  ls.reserve(n);
  if (n > 0) {
    ls.push_back(Letter::from_vertex(
        static_cast<int>(rng.below(static_cast<std::uint64_t>(rank.alphabet_size())))));
    for (std::size_t i = 1; i < n; ++i) {
      const int pick = static_cast<int>(
          rng.below(static_cast<std::uint64_t>(rank.alphabet_size() - 1)));
      ls.push_back(letter_skipping(pick, ls.back().inverse()));
    }
  }
  return Word::from_reduced(std::move(ls), rank);
}

Word sample_cyclically_reduced(Rank rank, std::size_t n, Rng& rng,
                               std::uint64_t* rejections) {
  assert(n >= 1);
  for (;;) {
    Word w = sample_freely_reduced(rank, n, rng);
    if (w.cyclically_reduced()) return w;
    if (rejections) ++*rejections;
  }
}

BoundedLengthSampler::BoundedLengthSampler(Rank rank, std::size_t max_len)
    : rank_(rank) {
  cumulative_.reserve(max_len + 1);
  BigInt acc = 0;
  for (std::size_t m = 0; m <= max_len; ++m) {
    acc += count_freely_reduced(rank, m);
    cumulative_.push_back(acc);
  }
}

std::size_t BoundedLengthSampler::sample_length(Rng& rng) const {
  const BigInt x = uniform_below(cumulative_.back(), rng);
  // first m with x < cumulative_[m]
  std::size_t lo = 0, hi = cumulative_.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (x < cumulative_[mid])
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

Word BoundedLengthSampler::sample(Rng& rng) const {
  return sample_freely_reduced(rank_, sample_length(rng), rng);
}

}  // namespace fg
