#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "fg/sample.hpp"
#include "fg/word.hpp"
#include "oracles.hpp"

using namespace fg;

namespace {

const Rank r2(2);

Word W(const char* text, int r = 2) { return parse_word(text, Rank(r)); }

std::vector<Letter> L(std::initializer_list<int> codes) {
  std::vector<Letter> out;
  for (int c : codes) out.push_back(Letter{static_cast<std::int8_t>(c)});
  return out;
}

}  // namespace

TEST_CASE("letter order is interleaved: a < A < b < B") {
  CHECK(Letter::from_char('a') < Letter::from_char('A'));
  CHECK(Letter::from_char('A') < Letter::from_char('b'));
  CHECK(Letter::from_char('b') < Letter::from_char('B'));
  CHECK(Letter::from_char('a').inverse() == Letter::from_char('A'));
  CHECK(Letter::from_char('B').vertex() == 3);
}

TEST_CASE("free_reduce cancels inverse pairs") {
  CHECK(free_reduce(L({1, -1}), r2).empty());
  CHECK(free_reduce(L({1, 2, -2, 1}), r2).letters() == L({1, 1}));
  CHECK_THROWS_AS(free_reduce(L({3}), r2), std::invalid_argument);
  CHECK_THROWS_AS(free_reduce(L({0, 1}), r2), std::invalid_argument);
}

TEST_CASE("free_reduce agrees with the stack oracle on random raw input") {
  Rng rng(1234);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t len = rng.below(13);
    std::vector<Letter> raw;
    for (std::size_t i = 0; i < len; ++i)
      raw.push_back(Letter::from_vertex(static_cast<int>(rng.below(4))));
    CHECK(free_reduce(raw, r2).letters() == oracle::stack_reduce(raw));
  }
}

TEST_CASE("free_reduce is idempotent and kills w * w^-1") {
  Rng rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    const Word w = sample_freely_reduced(r2, rng.below(20), rng);
    CHECK(free_reduce(w.letters(), r2) == w);
    CHECK((w * w.inverse()).empty());
  }
}

TEST_CASE("cyclic_trim examples") {
  SUBCASE("single conjugating letter") {
    const TrimReport rep = cyclic_trim(W("abA"));
    CHECK(rep.result == W("b"));
    CHECK(rep.steps == 1);
    CHECK(rep.conjugator == W("a"));
  }
  SUBCASE("already cyclically reduced") {
    const TrimReport rep = cyclic_trim(W("ba"));
    CHECK(rep.result == W("ba"));
    CHECK(rep.steps == 0);
  }
  SUBCASE("empty word") {
    const TrimReport rep = cyclic_trim(Word(r2));
    CHECK(rep.result.empty());
    CHECK(rep.steps == 0);
  }
}

TEST_CASE("cyclic_trim conservation and conjugation identity") {
  Rng rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const Word w = sample_freely_reduced(r2, rng.below(30), rng);
    const TrimReport rep = cyclic_trim(w);
    CHECK(rep.result.cyclically_reduced());
    CHECK(rep.conjugator.size() == rep.steps);
    CHECK(2 * rep.steps + rep.result.size() == w.size());
    CHECK(rep.conjugator * rep.result * rep.conjugator.inverse() == w);
  }
}

TEST_CASE("mean cyclic_trim steps stays under the closed-form bound") {
  // bound (2r-1)/(2r-2)^2 plus 0.1 slack, at n = 1000 over 10^4 samples
  for (int r : {2, 3}) {
    const Rank rank(r);
    const double bound =
        (2.0 * r - 1.0) / ((2.0 * r - 2.0) * (2.0 * r - 2.0)) + 0.1;
    std::uint64_t total_steps = 0;
    const std::size_t samples = 10000;
    for (std::size_t i = 0; i < samples; ++i) {
      Rng rng = Rng::stream(2026, i);
      total_steps += cyclic_trim(sample_freely_reduced(rank, 1000, rng)).steps;
    }
    const double mean = static_cast<double>(total_steps) / samples;
    CAPTURE(r);
    CHECK(mean <= bound);
  }
}

TEST_CASE("canonical_cyclic picks the least rotation") {
  CHECK(canonical_cyclic(W("ba")).str() == "ab");
  CHECK(canonical_cyclic(W("abA")).str() == "b");
  CHECK(canonical_cyclic(Word(r2)).str() == "1");
  // rotation invariance on random cyclically reduced words
  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const Word w = sample_cyclically_reduced(r2, 1 + rng.below(12), rng);
    const CyclicWord canon = canonical_cyclic(w);
    for (const auto& rot : oracle::all_rotations(w.letters()))
      CHECK(canonical_cyclic(Word::from_reduced(rot, r2)) == canon);
  }
}

TEST_CASE("least_rotation matches the brute-force oracle") {
  Rng rng(55);
  for (int trial = 0; trial < 2000; ++trial) {
    const Word w = sample_cyclically_reduced(r2, 1 + rng.below(15), rng);
    const std::size_t k = least_rotation(w.letters());
    CHECK(oracle::rotate(w.letters(), k) == oracle::brute_least_rotation(w.letters()));
  }
}

TEST_CASE("cyclic_equal examples") {
  CHECK(cyclic_equal(W("ab"), W("ba")));
  CHECK_FALSE(cyclic_equal(W("ab"), W("aB")));
  CHECK(cyclic_equal(Word(r2), Word(r2)));
  CHECK_FALSE(cyclic_equal(W("ab"), W("a")));
}

TEST_CASE("cyclic_equal agrees with rotation enumeration, all pairs <= 6") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto words = oracle::cyclically_reduced_words(r2, n);
    for (const auto& u : words)
      for (const auto& v : words)
        CHECK(cyclic_equal(u, v) == oracle::rotation_equal(u, v));
  }
}

TEST_CASE("cyclic_equal is an equivalence relation on random triples") {
  Rng rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.below(8);
    const Word a = sample_cyclically_reduced(r2, n, rng);
    const Word b = sample_cyclically_reduced(r2, n, rng);
    const Word c = sample_cyclically_reduced(r2, n, rng);
    CHECK(cyclic_equal(a, a));
    CHECK(cyclic_equal(a, b) == cyclic_equal(b, a));
    if (cyclic_equal(a, b) && cyclic_equal(b, c)) CHECK(cyclic_equal(a, c));
  }
}

TEST_CASE("count_freely_reduced formula and edge cases") {
  CHECK(count_freely_reduced(r2, 0) == 1);
  CHECK(count_freely_reduced(r2, 1) == 4);
  CHECK(count_freely_reduced(r2, 2) == 12);
  CHECK(count_freely_reduced(r2, 3) == 36);
  CHECK(count_freely_reduced(Rank(3), 2) == 30);
  // exhaustive cross-check, r = 2, n <= 7
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto words = oracle::freely_reduced_words(r2, n);
    CHECK(count_freely_reduced(r2, n) == words.size());
  }
}

TEST_CASE("sample_freely_reduced hits the uniform distribution at n = 2") {
  std::map<std::string, int> freq;
  const std::size_t draws = 100000;
  for (std::size_t i = 0; i < draws; ++i) {
    Rng rng = Rng::stream(5, i);
    ++freq[sample_freely_reduced(r2, 2, rng).str()];
  }
  CHECK(freq.size() == 12);
  const double p = 1.0 / 12.0;
  const double sigma = std::sqrt(draws * p * (1 - p));
  for (const auto& [word, count] : freq) {
    CAPTURE(word);
    CHECK(std::abs(count - draws * p) <= 3 * sigma);
  }
}

TEST_CASE("samplers are deterministic given the seed") {
  Rng a = Rng::stream(42, 17);
  Rng b = Rng::stream(42, 17);
  const Word wa = sample_freely_reduced(r2, 50, a);
  const Word wb = sample_freely_reduced(r2, 50, b);
  CHECK(wa == wb);
  CHECK(sample_freely_reduced(r2, 0, a).empty());
}

TEST_CASE("sample_cyclically_reduced: uniformity, n = 1 and n = 3") {
  std::map<std::string, int> freq1, freq3;
  const std::size_t draws = 40000;
  std::uint64_t rejections = 0;
  for (std::size_t i = 0; i < draws; ++i) {
    Rng rng = Rng::stream(9, i);
    ++freq1[sample_cyclically_reduced(r2, 1, rng).str()];
    ++freq3[sample_cyclically_reduced(r2, 3, rng, &rejections).str()];
  }
  CHECK(freq1.size() == 4);
  const auto enumerated = oracle::cyclically_reduced_words(r2, 3);
  CHECK(freq3.size() == enumerated.size());  // 28 words
  const double p = 1.0 / static_cast<double>(enumerated.size());
  const double sigma = std::sqrt(draws * p * (1 - p));
  for (const auto& w : enumerated) {
    CAPTURE(w.str());
    CHECK(freq3.contains(w.str()));
    CHECK(std::abs(freq3[w.str()] - draws * p) <= 5 * sigma);
  }
  // expected rejections per draw < 2 (acceptance probability >= 2/3)
  CHECK(static_cast<double>(rejections) / draws < 2.0);
}

TEST_CASE("bounded-length sampler draws lengths with exact ball weights") {
  const BoundedLengthSampler ball(r2, 4);
  BigInt expected_total = 0;
  for (std::size_t m = 0; m <= 4; ++m) expected_total += count_freely_reduced(r2, m);
  CHECK(ball.total() == expected_total);

  std::map<std::size_t, int> freq;
  const std::size_t draws = 60000;
  for (std::size_t i = 0; i < draws; ++i) {
    Rng rng = Rng::stream(13, i);
    const Word w = ball.sample(rng);
    CHECK(w.size() <= 4);
    ++freq[w.size()];
  }
  const double total = ball.total().convert_to<double>();
  for (std::size_t m = 0; m <= 4; ++m) {
    const double p = count_freely_reduced(r2, m).convert_to<double>() / total;
    const double sigma = std::sqrt(draws * p * (1 - p));
    CAPTURE(m);
    CHECK(std::abs(freq[m] - draws * p) <= 5 * sigma + 1);
  }
}

TEST_CASE("word text round trip and parse errors") {
  CHECK(W("abAB").str() == "abAB");
  CHECK(Word(r2).str() == "1");
  CHECK(parse_word("1", r2).empty());
  CHECK(parse_word("aA", r2).empty());  // parser feeds free reduction
  CHECK_THROWS_AS(parse_word("ac", r2), std::invalid_argument);   // beyond rank
  CHECK_THROWS_AS(parse_word("a b", r2), std::invalid_argument);  // non-alphabetic
  CHECK_THROWS_AS(parse_word("x1", r2), std::invalid_argument);
  CHECK(parse_word("c", Rank(3)).letters() == L({3}));
}

TEST_CASE("uniform_below covers the range without bias artifacts") {
  Rng rng(21);
  const BigInt bound = BigInt(1) << 100;
  std::set<int> top_bits;
  for (int i = 0; i < 200; ++i) {
    const BigInt x = uniform_below(bound, rng);
    CHECK(x >= 0);
    CHECK(x < bound);
    top_bits.insert(static_cast<int>(boost::multiprecision::msb(x + 1)));
  }
  CHECK(top_bits.size() > 1);  // not stuck in a narrow band
}
