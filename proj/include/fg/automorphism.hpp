#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fg/word.hpp"

namespace fg {

// Type I elementary automorphism: a permutation of X^{+-1} that commutes
// with inversion, stored as the images of the positive generators.
class LetterPermutation {
 public:
  // images[i] is the image of x_{i+1}; must form a signed permutation.
  explicit LetterPermutation(std::vector<Letter> images);
  static LetterPermutation identity(Rank rank);

  Rank rank() const { return rank_; }
  Letter image(Letter l) const {
    const Letter g = img_[static_cast<std::size_t>(l.generator_index())];
    return l.positive() ? g : g.inverse();
  }
  const std::vector<Letter>& generator_images() const { return img_; }

  LetterPermutation inverse() const;
  bool is_identity() const;

  // Text form "perm:" + images of x_1..x_r, e.g. "perm:bA".
  std::string str() const;

  friend bool operator==(const LetterPermutation& a, const LetterPermutation& b) {
    return a.img_ == b.img_;
  }

 private:
  std::vector<Letter> img_;
  Rank rank_;
};

// Type II elementary Whitehead automorphism (A, a): multiplier a with a
// subset A of X^{+-1} such that a in A, a^-1 not in A and A != {a}.
// Letters x outside {a, a^-1} map to x*a, a^-1*x, a^-1*x*a or x according
// to which of x, x^-1 lie in A; a itself is fixed. Bit v of the set mask
// corresponds to the letter with vertex index v.
class WhiteheadAutII {
 public:
  WhiteheadAutII(Letter multiplier, std::uint64_t set_mask, Rank rank);

  Rank rank() const { return rank_; }
  Letter multiplier() const { return multiplier_; }
  std::uint64_t set_mask() const { return set_mask_; }
  bool in_set(Letter l) const { return (set_mask_ >> l.vertex()) & 1u; }

  // Inverse is the type II automorphism ((A \ {a}) u {a^-1}, a^-1).
  WhiteheadAutII inverse() const;

  // Text form "mul:<letter>;set:<letters in vertex order>", e.g. "mul:a;set:ab".
  std::string str() const;

  friend bool operator==(const WhiteheadAutII& a, const WhiteheadAutII& b) {
    return a.multiplier_ == b.multiplier_ && a.set_mask_ == b.set_mask_;
  }

 private:
  Letter multiplier_;
  std::uint64_t set_mask_;
  Rank rank_;
};

using ElementaryAut = std::variant<LetterPermutation, WhiteheadAutII>;

Rank rank_of(const ElementaryAut& aut);

// All signed permutations: 2^r * r! elements, identity first.
std::vector<LetterPermutation> enumerate_type_I(Rank rank);

// The set E of type II automorphisms: 2r * (2^(2r-2) - 1) elements, in the
// fixed order (multiplier by vertex, then set mask ascending) that greedy
// minimization scans.
std::vector<WhiteheadAutII> enumerate_type_II(Rank rank);

// Letterwise image followed by free reduction.
Word apply(const ElementaryAut& aut, const Word& w);

// Image of a conjugacy class: apply to a representative, reduce, trim,
// canonicalize. Independent of the chosen representative.
CyclicWord apply_cyclic(const ElementaryAut& aut, const CyclicWord& w);

ElementaryAut invert(const ElementaryAut& aut);

// A sequence of elementary moves, applied left to right.
struct AutWitness {
  std::vector<ElementaryAut> moves;

  bool empty() const { return moves.empty(); }
  std::size_t size() const { return moves.size(); }
  void push(ElementaryAut move) { moves.push_back(std::move(move)); }

  // The witness mapping backwards: inverted moves in reverse order.
  AutWitness inverted() const;
};

Word apply_witness(const AutWitness& witness, const Word& w);
CyclicWord apply_witness(const AutWitness& witness, const CyclicWord& w);

std::string to_string(const ElementaryAut& aut);
// Moves joined with single spaces; the empty witness is the empty string.
std::string to_string(const AutWitness& witness);

ElementaryAut parse_move(std::string_view text, Rank rank);
AutWitness parse_witness(std::string_view text, Rank rank);

}  // namespace fg
