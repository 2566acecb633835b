#include "fg/automorphism.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace fg {

LetterPermutation::LetterPermutation(std::vector<Letter> images)
    : img_(std::move(images)), rank_(static_cast<int>(img_.size())) {
  std::uint64_t seen = 0;
  for (Letter l : img_) {
    if (l.code == 0 || l.generator_index() >= rank_.value())
      throw std::invalid_argument("permutation image out of rank range");
    const std::uint64_t bit = 1ull << l.generator_index();
    if (seen & bit) throw std::invalid_argument("permutation images not distinct");
    seen |= bit;
  }
}

LetterPermutation LetterPermutation::identity(Rank rank) {
  std::vector<Letter> img;
  img.reserve(static_cast<std::size_t>(rank.value()));
  for (int i = 0; i < rank.value(); ++i) img.push_back(Letter::generator(i));
  return LetterPermutation(std::move(img));
}

LetterPermutation LetterPermutation::inverse() const {
  std::vector<Letter> img(img_.size());
  for (int i = 0; i < rank_.value(); ++i) {
    const Letter target = img_[static_cast<std::size_t>(i)];
    // x_{i+1} -> x_j^e  implies  x_j -> x_{i+1}^e
    img[static_cast<std::size_t>(target.generator_index())] =
        target.positive() ? Letter::generator(i) : Letter::generator(i).inverse();
  }
  return LetterPermutation(std::move(img));
}

bool LetterPermutation::is_identity() const {
  for (int i = 0; i < rank_.value(); ++i)
    if (img_[static_cast<std::size_t>(i)] != Letter::generator(i)) return false;
  return true;
}

std::string LetterPermutation::str() const {
  std::string s = "perm:";
  for (Letter l : img_) s.push_back(l.to_char());
  return s;
}

WhiteheadAutII::WhiteheadAutII(Letter multiplier, std::uint64_t set_mask, Rank rank)
    : multiplier_(multiplier), set_mask_(set_mask), rank_(rank) {
  if (multiplier.code == 0 || multiplier.generator_index() >= rank.value())
    throw std::invalid_argument("multiplier out of rank range");
  if (set_mask >> rank.alphabet_size())
    throw std::invalid_argument("set contains letters beyond rank");
  const std::uint64_t mul_bit = 1ull << multiplier.vertex();
  const std::uint64_t inv_bit = 1ull << multiplier.inverse().vertex();
  if (!(set_mask & mul_bit))
    throw std::invalid_argument("multiplier must belong to the set");
  if (set_mask & inv_bit)
    throw std::invalid_argument("multiplier inverse must not belong to the set");
  if (set_mask == mul_bit)
    throw std::invalid_argument("set {a} is the identity and is excluded");
}

WhiteheadAutII WhiteheadAutII::inverse() const {
  std::uint64_t mask = set_mask_;
  mask &= ~(1ull << multiplier_.vertex());
  mask |= 1ull << multiplier_.inverse().vertex();
  return WhiteheadAutII(multiplier_.inverse(), mask, rank_);
}

std::string WhiteheadAutII::str() const {
  std::string s = "mul:";
  s.push_back(multiplier_.to_char());
  s += ";set:";
  for (int v = 0; v < rank_.alphabet_size(); ++v)
    if ((set_mask_ >> v) & 1u) s.push_back(Letter::from_vertex(v).to_char());
  return s;
}

Rank rank_of(const ElementaryAut& aut) {
  return std::visit([](const auto& a) { return a.rank(); }, aut);
}

std::vector<LetterPermutation> enumerate_type_I(Rank rank) {
  const int r = rank.value();
  std::vector<LetterPermutation> out;
  std::vector<int> perm(static_cast<std::size_t>(r));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (std::uint64_t signs = 0; signs < (1ull << r); ++signs) {
      std::vector<Letter> img;
      img.reserve(static_cast<std::size_t>(r));
      for (int i = 0; i < r; ++i) {
        Letter l = Letter::generator(perm[static_cast<std::size_t>(i)]);
        img.push_back((signs >> i) & 1u ? l.inverse() : l);
      }
      out.emplace_back(std::move(img));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<WhiteheadAutII> enumerate_type_II(Rank rank) {
  const int n = rank.alphabet_size();
  std::vector<WhiteheadAutII> out;
  out.reserve(static_cast<std::size_t>(n) * ((1ull << (n - 2)) - 1));
  for (int mv = 0; mv < n; ++mv) {
    const Letter a = Letter::from_vertex(mv);
    std::vector<int> others;  // vertices other than a, a^-1, ascending
    others.reserve(static_cast<std::size_t>(n - 2));
    for (int v = 0; v < n; ++v)
      if (v != a.vertex() && v != a.inverse().vertex()) others.push_back(v);
    for (std::uint64_t bits = 1; bits < (1ull << others.size()); ++bits) {
      std::uint64_t mask = 1ull << a.vertex();
      for (std::size_t i = 0; i < others.size(); ++i)
        if ((bits >> i) & 1u) mask |= 1ull << others[i];
      out.emplace_back(a, mask, rank);
    }
  }
  return out;
}

namespace {

void append_image(std::vector<Letter>& out, const WhiteheadAutII& t, Letter c) {
  const Letter a = t.multiplier();
  if (c == a || c == a.inverse()) {
    out.push_back(c);
    return;
  }
  const bool self_in = t.in_set(c);
  const bool inv_in = t.in_set(c.inverse());
  if (self_in && inv_in) {
    out.push_back(a.inverse());
    out.push_back(c);
    out.push_back(a);
  } else if (self_in) {
    out.push_back(c);
    out.push_back(a);
  } else if (inv_in) {
    out.push_back(a.inverse());
    out.push_back(c);
  } else {
    out.push_back(c);
  }
}

}  // namespace

Word apply(const ElementaryAut& aut, const Word& w) {
  assert(rank_of(aut) == w.rank());
  if (const auto* perm = std::get_if<LetterPermutation>(&aut)) {
    // A signed permutation maps reduced words to reduced words.
    std::vector<Letter> out;
    out.reserve(w.size());
    for (Letter l : w.letters()) out.push_back(perm->image(l));
    return Word::from_reduced(std::move(out), w.rank());
  }
  const auto& t = std::get<WhiteheadAutII>(aut);
  std::vector<Letter> out;
  out.reserve(3 * w.size());
  for (Letter l : w.letters()) append_image(out, t, l);
  return free_reduce(out, w.rank());
}

CyclicWord apply_cyclic(const ElementaryAut& aut, const CyclicWord& w) {
  return canonical_cyclic(fg::apply(aut, w.representative()));
}

ElementaryAut invert(const ElementaryAut& aut) {
  if (const auto* perm = std::get_if<LetterPermutation>(&aut))
    return perm->inverse();
  return std::get<WhiteheadAutII>(aut).inverse();
}

AutWitness AutWitness::inverted() const {
  AutWitness out;
  out.moves.reserve(moves.size());
  for (auto it = moves.rbegin(); it != moves.rend(); ++it)
    out.moves.push_back(invert(*it));
  return out;
}

Word apply_witness(const AutWitness& witness, const Word& w) {
  Word cur = w;
  for (const auto& move : witness.moves) cur = fg::apply(move, cur);
  return cur;
}

CyclicWord apply_witness(const AutWitness& witness, const CyclicWord& w) {
  CyclicWord cur = w;
  for (const auto& move : witness.moves) cur = apply_cyclic(move, cur);
  return cur;
}

std::string to_string(const ElementaryAut& aut) {
  return std::visit([](const auto& a) { return a.str(); }, aut);
}

std::string to_string(const AutWitness& witness) {
  std::string s;
  for (std::size_t i = 0; i < witness.moves.size(); ++i) {
    if (i) s += ' ';
    s += to_string(witness.moves[i]);
  }
  return s;
}

ElementaryAut parse_move(std::string_view text, Rank rank) {
  constexpr std::string_view kPerm = "perm:";
  constexpr std::string_view kMul = "mul:";
  constexpr std::string_view kSet = ";set:";
  if (text.substr(0, kPerm.size()) == kPerm) {
    const auto body = text.substr(kPerm.size());
    if (static_cast<int>(body.size()) != rank.value())
      throw std::invalid_argument("perm move must list one image per generator");
    std::vector<Letter> img;
    img.reserve(body.size());
    for (char c : body) img.push_back(Letter::from_char(c));
    LetterPermutation p(std::move(img));
    if (p.rank().value() != rank.value())
      throw std::invalid_argument("perm move rank mismatch");
    return p;
  }
  if (text.substr(0, kMul.size()) == kMul) {
    const auto sep = text.find(kSet);
    if (sep == std::string_view::npos || sep != kMul.size() + 1)
      throw std::invalid_argument("malformed type II move: " + std::string(text));
    const Letter a = Letter::from_char(text[kMul.size()]);
    std::uint64_t mask = 0;
    for (char c : text.substr(sep + kSet.size())) {
      const Letter l = Letter::from_char(c);
      if (l.generator_index() >= rank.value())
        throw std::invalid_argument("set letter beyond rank");
      mask |= 1ull << l.vertex();
    }
    return WhiteheadAutII(a, mask, rank);
  }
  throw std::invalid_argument("unrecognized move: " + std::string(text));
}

AutWitness parse_witness(std::string_view text, Rank rank) {
  AutWitness out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos >= text.size()) break;
    std::size_t end = text.find(' ', pos);
    if (end == std::string_view::npos) end = text.size();
    out.push(parse_move(text.substr(pos, end - pos), rank));
    pos = end;
  }
  return out;
}

}  // namespace fg
