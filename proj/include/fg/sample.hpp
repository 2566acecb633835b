#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fg/rng.hpp"
#include "fg/word.hpp"

namespace fg {

using BigInt = boost::multiprecision::cpp_int;

// Number of freely reduced words of length n: 2r(2r-1)^(n-1) for n >= 1,
// and 1 for n = 0 (the empty word).
BigInt count_freely_reduced(Rank rank, std::size_t n);

// Uniform over the BigInt range [0, bound); bound must be positive.
BigInt uniform_below(const BigInt& bound, Rng& rng);

// Uniform over freely reduced words of length n: first letter uniform over
// 2r choices, each later letter uniform over the 2r-1 non-cancelling ones.
Word sample_freely_reduced(Rank rank, std::size_t n, Rng& rng);

// Uniform over cyclically reduced words of length n >= 1, by rejection:
// freely reduced words are redrawn until last letter != inverse of first.
// If `rejections` is non-null it is incremented once per rejected draw.
Word sample_cyclically_reduced(Rank rank, std::size_t n, Rng& rng,
                               std::uint64_t* rejections = nullptr);

// Uniform over all freely reduced words of length <= max_len (the ball of
// radius max_len, empty word included). Lengths are drawn with exact
// weights count_freely_reduced(r, m), then letters are drawn uniformly.
class BoundedLengthSampler {
 public:
  BoundedLengthSampler(Rank rank, std::size_t max_len);

  Rank rank() const { return rank_; }
  std::size_t max_len() const { return cumulative_.size() - 1; }
  const BigInt& total() const { return cumulative_.back(); }

  std::size_t sample_length(Rng& rng) const;
  Word sample(Rng& rng) const;

 private:
  Rank rank_;
  std::vector<BigInt> cumulative_;  // cumulative_[m] = # words of length <= m
};

}  // namespace fg
