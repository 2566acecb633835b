#include "fg/word.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace fg {

Rank::Rank(int r) : r_(r) {
  if (r < kMin || r > kMax)
    throw std::invalid_argument("rank must be between 2 and 26, got " +
                                std::to_string(r));
}

char Letter::to_char() const {
  assert(code != 0);
  return code > 0 ? static_cast<char>('a' + code - 1)
                  : static_cast<char>('A' - code - 1);
}

Letter Letter::from_char(char c) {
  if (c >= 'a' && c <= 'z') return Letter{static_cast<std::int8_t>(c - 'a' + 1)};
  if (c >= 'A' && c <= 'Z') return Letter{static_cast<std::int8_t>(-(c - 'A' + 1))};
  throw std::invalid_argument(std::string("not a generator letter: '") + c + "'");
}

Letter Letter::from_vertex(int v) {
  const int gen = v / 2 + 1;
  return Letter{static_cast<std::int8_t>(v % 2 == 0 ? gen : -gen)};
}

bool Word::cyclically_reduced() const {
  return letters_.size() <= 1 || letters_.front() != letters_.back().inverse();
}

Word Word::inverse() const {
  Word out(rank_);
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.letters_.push_back(it->inverse());
  return out;
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string s;
  s.reserve(letters_.size());
  for (Letter l : letters_) s.push_back(l.to_char());
  return s;
}

Word Word::from_reduced(std::vector<Letter> letters, Rank rank) {
  Word w(rank);
  w.letters_ = std::move(letters);
#ifndef NDEBUG
  for (std::size_t i = 0; i < w.letters_.size(); ++i) {
    assert(w.letters_[i].code != 0 && w.letters_[i].generator_index() < rank.value());
    assert(i == 0 || w.letters_[i] != w.letters_[i - 1].inverse());
  }
#endif
  return w;
}

Word operator*(const Word& a, const Word& b) {
  assert(a.rank() == b.rank());
  std::vector<Letter> out = a.letters_;
  for (Letter l : b.letters_) {
    if (!out.empty() && out.back() == l.inverse())
      out.pop_back();
    else
      out.push_back(l);
  }
  return Word::from_reduced(std::move(out), a.rank_);
}

Word free_reduce(std::span<const Letter> raw, Rank rank) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter l : raw) {
    if (l.code == 0 || l.generator_index() >= rank.value())
      throw std::invalid_argument("letter out of rank range");
    if (!out.empty() && out.back() == l.inverse())
      out.pop_back();
    else
      out.push_back(l);
  }
  return Word::from_reduced(std::move(out), rank);
}

std::vector<Letter> parse_letters(std::string_view text, Rank rank) {
  if (text == "1") return {};
  std::vector<Letter> out;
  out.reserve(text.size());
  for (char c : text) {
    Letter l = Letter::from_char(c);
    if (l.generator_index() >= rank.value())
      throw std::invalid_argument(std::string("letter '") + c +
                                  "' beyond rank " + std::to_string(rank.value()));
    out.push_back(l);
  }
  return out;
}

Word parse_word(std::string_view text, Rank rank) {
  auto raw = parse_letters(text, rank);
  return free_reduce(raw, rank);
}

TrimReport cyclic_trim(const Word& w) {
  const auto& ls = w.letters();
  std::size_t lo = 0, hi = ls.size();
  // Each step looks at the two ends only; freely reduced input guarantees
  // the loop stops before the window drops below one letter.
  while (hi - lo >= 2 && ls[lo] == ls[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  TrimReport rep{Word(w.rank()), Word(w.rank()), lo};
  rep.result = Word::from_reduced({ls.begin() + static_cast<std::ptrdiff_t>(lo),
                                   ls.begin() + static_cast<std::ptrdiff_t>(hi)},
                                  w.rank());
  rep.conjugator = Word::from_reduced(
      {ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(lo)}, w.rank());
  return rep;
}

std::string CyclicWord::str() const {
  if (letters_.empty()) return "1";
  std::string s;
  s.reserve(letters_.size());
  for (Letter l : letters_) s.push_back(l.to_char());
  return s;
}

CyclicWord CyclicWord::from_canonical(std::vector<Letter> letters, Rank rank) {
  CyclicWord w(rank);
  w.letters_ = std::move(letters);
  assert(least_rotation(w.letters_) == 0);
  return w;
}

Word CyclicWord::representative() const {
  return Word::from_reduced(letters_, rank_);
}

// Booth's least-rotation algorithm on the interleaved letter order.
std::size_t least_rotation(std::span<const Letter> letters) {
  const std::size_t n = letters.size();
  if (n <= 1) return 0;
  auto key = [&](std::size_t i) { return letters[i % n].vertex(); };
  std::vector<std::ptrdiff_t> fail(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const int sj = key(j);
    std::ptrdiff_t i = fail[j - k - 1];
    while (i != -1 && sj != key(k + static_cast<std::size_t>(i) + 1)) {
      if (sj < key(k + static_cast<std::size_t>(i) + 1))
        k = j - static_cast<std::size_t>(i) - 1;
      i = fail[static_cast<std::size_t>(i)];
    }
    if (sj != key(k + static_cast<std::size_t>(i) + 1)) {  // i == -1 here
      if (sj < key(k)) k = j;
      fail[j - k] = -1;
    } else {
      fail[j - k] = i + 1;
    }
  }
  return k % n;
}

CyclicWord canonical_cyclic(const Word& w) {
  Word core = cyclic_trim(w).result;
  const auto& ls = core.letters();
  const std::size_t rot = least_rotation(ls);
  std::vector<Letter> out;
  out.reserve(ls.size());
  for (std::size_t i = 0; i < ls.size(); ++i)
    out.push_back(ls[(rot + i) % ls.size()]);
  return CyclicWord::from_canonical(std::move(out), w.rank());
}

bool kmp_find_cyclic(std::span<const Letter> base, std::size_t text_len,
                     std::span<const Letter> pattern) {
  assert(!pattern.empty());
  assert(!base.empty() || text_len == 0);
  if (pattern.size() > text_len) return false;
  const std::size_t m = pattern.size();
  std::vector<std::size_t> border(m, 0);
  for (std::size_t i = 1; i < m; ++i) {
    std::size_t b = border[i - 1];
    while (b > 0 && pattern[i] != pattern[b]) b = border[b - 1];
    border[i] = (pattern[i] == pattern[b]) ? b + 1 : 0;
  }
  std::size_t matched = 0;
  for (std::size_t i = 0; i < text_len; ++i) {
    const Letter c = base[i % base.size()];
    while (matched > 0 && c != pattern[matched]) matched = border[matched - 1];
    if (c == pattern[matched]) ++matched;
    if (matched == m) return true;
  }
  return false;
}

bool cyclic_equal(const Word& u, const Word& v) {
  assert(u.cyclically_reduced() && v.cyclically_reduced());
  if (u.size() != v.size()) return false;
  if (u.empty()) return true;
  return kmp_find_cyclic(u.letters(), 2 * u.size() - 1, v.letters());
}

bool cyclic_equal(const CyclicWord& u, const CyclicWord& v) {
  // Canonical rotations make this a plain comparison, but keep the KMP
  // route as the contract requires linear matching on arbitrary rotations.
  if (u.size() != v.size()) return false;
  if (u.empty()) return true;
  return kmp_find_cyclic(u.letters(), 2 * u.size() - 1, v.letters());
}

static std::size_t fnv1a(std::span<const Letter> ls) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (Letter l : ls) {
    h ^= static_cast<std::uint8_t>(l.code);
    h *= 0x100000001b3ull;
  }
  return static_cast<std::size_t>(h);
}

std::size_t WordHash::operator()(const Word& w) const {
  return fnv1a(w.letters());
}
std::size_t CyclicWordHash::operator()(const CyclicWord& w) const {
  return fnv1a(w.letters());
}

}  // namespace fg
