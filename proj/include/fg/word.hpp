#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fg {

// Number of free generators. Capped at 26 so that generators map onto ASCII
// letters: x_1 = 'a', x_2 = 'b', ..., with uppercase for inverses.
class Rank {
 public:
  static constexpr int kMin = 2;
  static constexpr int kMax = 26;

  explicit Rank(int r);
  int value() const { return r_; }
  int alphabet_size() const { return 2 * r_; }  // |X^{+-1}|

  friend bool operator==(Rank a, Rank b) { return a.r_ == b.r_; }

 private:
  int r_;
};

// A signed generator: code i > 0 is x_i, code -i is x_i^{-1}. Letters are
// ordered x_1 < x_1^{-1} < x_2 < x_2^{-1} < ... (the interleaved order used
// for canonical rotations); vertex() is the position in that order, which
// doubles as the vertex index in Whitehead graphs.
struct Letter {
  std::int8_t code = 0;

  Letter inverse() const { return Letter{static_cast<std::int8_t>(-code)}; }
  bool positive() const { return code > 0; }
  int generator_index() const { return (code > 0 ? code : -code) - 1; }
  int vertex() const { return 2 * generator_index() + (code < 0 ? 1 : 0); }

  char to_char() const;
  static Letter from_char(char c);  // throws std::invalid_argument
  static Letter from_vertex(int v);
  static Letter generator(int index) {  // 0-based
    return Letter{static_cast<std::int8_t>(index + 1)};
  }

  friend bool operator==(Letter a, Letter b) { return a.code == b.code; }
  friend std::strong_ordering operator<=>(Letter a, Letter b) {
    return a.vertex() <=> b.vertex();
  }
};

// A freely reduced word over the generators of F_r. The constructor-like
// entry points (free_reduce, parse_word) establish the invariant; letters
// are immutable afterwards.
class Word {
 public:
  explicit Word(Rank rank) : rank_(rank) {}

  const std::vector<Letter>& letters() const { return letters_; }
  Rank rank() const { return rank_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter at(std::size_t i) const { return letters_[i]; }

  bool cyclically_reduced() const;
  Word inverse() const;
  std::string str() const;

  // Trusted constructor: `letters` must already be freely reduced.
  static Word from_reduced(std::vector<Letter> letters, Rank rank);

  // Group multiplication: concatenation followed by free reduction.
  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) {
    return a.rank_ == b.rank_ && a.letters_ == b.letters_;
  }

 private:
  std::vector<Letter> letters_;
  Rank rank_;
};

// Free reduction: cancels adjacent inverse pairs until none remain.
// Throws std::invalid_argument if a letter is out of rank range.
Word free_reduce(std::span<const Letter> raw, Rank rank);

// Text form: 'a'..'z' for generators, 'A'..'Z' for inverses, "1" for the
// empty word. parse_letters rejects anything else or letters beyond rank.
std::vector<Letter> parse_letters(std::string_view text, Rank rank);
Word parse_word(std::string_view text, Rank rank);  // parse + free_reduce

struct TrimReport {
  Word result;      // cyclically reduced core
  Word conjugator;  // removed prefix: input = conjugator * result * conjugator^-1
  std::size_t steps = 0;  // delete-pair operations; |conjugator| == steps
};

// Cyclic reduction by repeated first/last comparison. Only the two ends of
// the word are touched at each step (realized as a shrinking index window,
// which gives constant-time access and removal at both ends).
TrimReport cyclic_trim(const Word& w);

// A conjugacy class of F_r: a cyclically reduced word stored as its
// lexicographically least rotation under the interleaved letter order.
class CyclicWord {
 public:
  explicit CyclicWord(Rank rank) : rank_(rank) {}

  const std::vector<Letter>& letters() const { return letters_; }
  Rank rank() const { return rank_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter at(std::size_t i) const { return letters_[i]; }
  std::string str() const;

  // Trusted constructor: `letters` must be the canonical rotation of a
  // cyclically reduced word.
  static CyclicWord from_canonical(std::vector<Letter> letters, Rank rank);

  // A plain Word view of the stored rotation.
  Word representative() const;

  friend bool operator==(const CyclicWord& a, const CyclicWord& b) {
    return a.rank_ == b.rank_ && a.letters_ == b.letters_;
  }

 private:
  std::vector<Letter> letters_;
  Rank rank_;
};

// Trims w and canonicalizes the rotation. Two words are conjugate iff their
// canonical cyclic forms are equal.
CyclicWord canonical_cyclic(const Word& w);

// Index of the lexicographically least rotation (Booth's algorithm).
std::size_t least_rotation(std::span<const Letter> letters);

// True iff v is a rotation of u. Both inputs must be cyclically reduced.
// Single Knuth-Morris-Pratt pass of v over u*u; linear in |u| + |v|.
bool cyclic_equal(const Word& u, const Word& v);
bool cyclic_equal(const CyclicWord& u, const CyclicWord& v);

// KMP search of `pattern` inside the first `text_len` letters of the
// periodic extension of `base` (text[i] = base[i % base.size()]).
// Pattern must be nonempty; returns true iff an occurrence exists.
bool kmp_find_cyclic(std::span<const Letter> base, std::size_t text_len,
                     std::span<const Letter> pattern);

struct WordHash {
  std::size_t operator()(const Word& w) const;
};
struct CyclicWordHash {
  std::size_t operator()(const CyclicWord& w) const;
};

}  // namespace fg

template <>
struct std::hash<fg::Word> {
  std::size_t operator()(const fg::Word& w) const {
    return fg::WordHash{}(w);
  }
};
template <>
struct std::hash<fg::CyclicWord> {
  std::size_t operator()(const fg::CyclicWord& w) const {
    return fg::CyclicWordHash{}(w);
  }
};
