#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fg/minimize.hpp"
#include "fg/orbit.hpp"
#include "fg/sample.hpp"
#include "oracles.hpp"

using namespace fg;

namespace {

const Rank r2(2);

CyclicWord C(const char* text, int r = 2) {
  return canonical_cyclic(parse_word(text, Rank(r)));
}

// Canonical forms of the images of w under all letter permutations.
std::set<std::string> type_I_closure(const CyclicWord& w) {
  std::set<std::string> out;
  for (const auto& p : enumerate_type_I(w.rank()))
    out.insert(apply_cyclic(ElementaryAut(p), w).str());
  return out;
}

}  // namespace

TEST_CASE("greedy_minimize examples") {
  SUBCASE("single letter is already minimal") {
    const MinimizationResult res = greedy_minimize(C("a"));
    CHECK(res.minimal == C("a"));
    CHECK(res.rounds == 0);
    CHECK(res.witness.empty());
  }
  SUBCASE("ab reduces to a single letter in one round") {
    const MinimizationResult res = greedy_minimize(C("ab"));
    CHECK(res.minimal.size() == 1);
    CHECK(res.rounds == 1);
    CHECK(res.witness.size() == 1);
  }
  SUBCASE("the commutator is minimal at length 4") {
    const MinimizationResult res = greedy_minimize(C("ABab"));
    CHECK(res.minimal == C("ABab"));
    CHECK(res.rounds == 0);
  }
}

TEST_CASE("greedy_minimize reaches a fixed point with a valid witness") {
  Rng rng(101);
  for (int trial = 0; trial < 400; ++trial) {
    const Word w = sample_freely_reduced(r2, rng.below(14), rng);
    const CyclicWord c = canonical_cyclic(w);
    const MinimizationResult res = greedy_minimize(c);
    CHECK(is_minimal(res.minimal));
    CHECK(apply_witness(res.witness, c) == res.minimal);
    CHECK(res.minimal.size() <= c.size());
    CHECK(res.rounds <= c.size());
    CHECK(res.witness.size() == res.rounds);
  }
}

TEST_CASE("is_minimal examples and agreement with greedy_minimize") {
  CHECK(is_minimal(C("a")));
  CHECK(is_minimal(C("B")));
  CHECK(is_minimal(C("aa")));  // length 2 is the orbit minimum of a^2
  CHECK_FALSE(is_minimal(C("ab")));
  Rng rng(103);
  for (int trial = 0; trial < 300; ++trial) {
    const CyclicWord c =
        canonical_cyclic(sample_freely_reduced(r2, rng.below(12), rng));
    CHECK(is_minimal(c) == (greedy_minimize(c).rounds == 0));
  }
}

TEST_CASE("is_strictly_minimal examples") {
  CHECK(is_strictly_minimal(C("a")));
  CHECK_FALSE(is_strictly_minimal(C("ab")));  // not even minimal
  CHECK(is_strictly_minimal(CyclicWord(r2)));  // empty word, by convention
  CHECK(is_minimal(CyclicWord(r2)));
}

TEST_CASE("strict minimality implies minimality; type I conjugation preserves it") {
  Rng rng(107);
  for (int trial = 0; trial < 300; ++trial) {
    const CyclicWord c =
        canonical_cyclic(sample_cyclically_reduced(r2, 1 + rng.below(12), rng));
    if (!is_strictly_minimal(c)) continue;
    CHECK(is_minimal(c));
    for (const auto& p : enumerate_type_I(r2))
      CHECK(is_strictly_minimal(apply_cyclic(ElementaryAut(p), c)));
  }
}

TEST_CASE("operational SM test matches the level-set characterization, |w| <= 6") {
  // For minimal w: strictly minimal iff the whole level set is the type I
  // closure of w.
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& w : oracle::cyclically_reduced_words(r2, n)) {
      const CyclicWord c = canonical_cyclic(w);
      if (!is_minimal(c)) continue;
      const OrbitLevelGraph level = level_graph(c);
      REQUIRE(level.exhausted);
      std::set<std::string> level_set;
      for (const auto& v : level.vertices) level_set.insert(v.str());
      CHECK(is_strictly_minimal(c) == (level_set == type_I_closure(c)));
    }
  }
}

TEST_CASE("orbit minimum is invariant under elementary moves, |w| <= 6") {
  std::vector<ElementaryAut> moves;
  for (auto& t : enumerate_type_II(r2)) moves.emplace_back(t);
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const auto& w : oracle::cyclically_reduced_words(r2, n)) {
      const CyclicWord c = canonical_cyclic(w);
      const std::size_t min_len = greedy_minimize(c).minimal.size();
      for (const auto& move : moves)
        CHECK(greedy_minimize(apply_cyclic(move, c)).minimal.size() == min_len);
    }
  }
}

TEST_CASE("SM fraction grows with the word length (genericity trend)") {
  auto sm_fraction = [&](std::size_t n, std::uint64_t salt) {
    const std::size_t samples = 500;
    std::size_t hits = 0;
    for (std::size_t i = 0; i < samples; ++i) {
      Rng rng = Rng::stream(salt, i);
      const Word w = sample_cyclically_reduced(r2, n, rng);
      if (is_strictly_minimal(canonical_cyclic(w))) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(samples);
  };
  const double at20 = sm_fraction(20, 11);
  const double at200 = sm_fraction(200, 12);
  CAPTURE(at20);
  CAPTURE(at200);
  CHECK(at200 > at20);
}
