#include "fg/orbit.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "fg/whitehead_graph.hpp"

namespace fg {

namespace {

// Type II in enumeration order, then the letter permutations: the fixed
// move order for BFS edge expansion.
std::vector<ElementaryAut> all_moves(Rank rank) {
  std::vector<ElementaryAut> moves;
  for (auto& t : enumerate_type_II(rank)) moves.emplace_back(std::move(t));
  for (auto& p : enumerate_type_I(rank)) moves.emplace_back(std::move(p));
  return moves;
}

}  // namespace

bool OrbitLevelGraph::contains(const CyclicWord& w) const {
  return w == root || parent.contains(w);
}

AutWitness OrbitLevelGraph::path_from_root(const CyclicWord& w) const {
  AutWitness out;
  CyclicWord cur = w;
  while (!(cur == root)) {
    const auto it = parent.find(cur);
    if (it == parent.end())
      throw std::invalid_argument("path_from_root: vertex not in level graph");
    out.push(it->second.second);
    cur = it->second.first;
  }
  std::reverse(out.moves.begin(), out.moves.end());
  return out;
}

OrbitLevelGraph level_graph(const CyclicWord& w, std::size_t cap) {
  if (!is_minimal(w))
    throw std::invalid_argument("level_graph requires a minimal cyclic word");
  const auto moves = all_moves(w.rank());

  OrbitLevelGraph g{w, {}, {}, true, 0};
  std::unordered_set<CyclicWord, CyclicWordHash> seen;
  std::deque<CyclicWord> frontier;
  seen.insert(w);
  g.vertices.push_back(w);
  frontier.push_back(w);

  while (!frontier.empty()) {
    const CyclicWord cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& move : moves) {
      g.letters_examined += cur.size();
      CyclicWord image = apply_cyclic(move, cur);
      if (image.size() != w.size()) continue;  // longer; never shorter at minimum
      if (seen.contains(image)) continue;
      if (g.vertices.size() >= cap) {
        g.exhausted = false;
        return g;
      }
      seen.insert(image);
      g.vertices.push_back(image);
      g.parent.emplace(image, std::make_pair(cur, move));
      frontier.push_back(image);
    }
  }
  return g;
}

namespace {

// Stage C fast path for two strictly minimal words of equal length: u ~ v
// iff some letter permutation maps u onto a rotation of v.
std::optional<LetterPermutation> sm_permutation_match(const CyclicWord& u,
                                                      const CyclicWord& v,
                                                      std::uint64_t* work) {
  for (const auto& perm : enumerate_type_I(u.rank())) {
    const Word image = fg::apply(ElementaryAut(perm), u.representative());
    *work += u.size();
    if (image.size() != v.size()) continue;
    *work += u.size() + 2 * v.size();  // KMP pass
    if (cyclic_equal(Word::from_reduced(v.letters(), v.rank()), image))
      return perm;
  }
  return std::nullopt;
}

}  // namespace

EquivVerdict same_orbit(const Word& u, const Word& v, std::size_t cap) {
  assert(u.rank() == v.rank());
  EquivVerdict verdict(u.rank());
  auto& work = verdict.stats.letters_examined;

  const TrimReport tu = cyclic_trim(u);
  const TrimReport tv = cyclic_trim(v);
  work += 2 * (tu.steps + 1) + 2 * (tv.steps + 1);
  const CyclicWord cu = canonical_cyclic(tu.result);
  const CyclicWord cv = canonical_cyclic(tv.result);
  work += cu.size() + cv.size();

  const bool sm_u = is_strictly_minimal(cu, &work);
  const bool sm_v = is_strictly_minimal(cv, &work);

  verdict.u_min = cu;
  verdict.v_min = cv;

  if (sm_u && sm_v) {
    verdict.path = EquivPath::FastSM;
    if (cu.size() != cv.size()) {
      verdict.outcome = EquivOutcome::NotEquivalent;
      return verdict;
    }
    if (auto perm = sm_permutation_match(cu, cv, &work)) {
      verdict.outcome = EquivOutcome::Equivalent;
      AutWitness wit;
      wit.push(*perm);
      verdict.witness = std::move(wit);
      return verdict;
    }
    verdict.outcome = EquivOutcome::NotEquivalent;
    return verdict;
  }

  if (sm_u != sm_v) {
    // A strictly minimal word is minimal, so its length is its orbit
    // minimum, and its whole level set is strictly minimal as well. The
    // non-SM side can only match from strictly above that length.
    const std::size_t sm_len = sm_u ? cu.size() : cv.size();
    const std::size_t other_len = sm_u ? cv.size() : cu.size();
    if (other_len <= sm_len) {
      verdict.path = EquivPath::FastSM;
      verdict.outcome = EquivOutcome::NotEquivalent;
      return verdict;
    }
  }

  MinimizationResult mu = greedy_minimize(cu);
  MinimizationResult mv = greedy_minimize(cv);
  work += mu.letters_examined + mv.letters_examined;
  verdict.u_min = mu.minimal;
  verdict.v_min = mv.minimal;

  if (mu.minimal.size() != mv.minimal.size()) {
    verdict.path = EquivPath::LengthMismatch;
    verdict.outcome = EquivOutcome::NotEquivalent;
    return verdict;
  }

  verdict.path = EquivPath::LevelSearch;
  OrbitLevelGraph level = level_graph(mu.minimal, cap);
  work += level.letters_examined;
  verdict.stats.vertices_explored = level.vertices.size();

  if (level.contains(mv.minimal)) {
    verdict.outcome = EquivOutcome::Equivalent;
    AutWitness wit = std::move(mu.witness);
    for (auto& move : level.path_from_root(mv.minimal).moves)
      wit.push(std::move(move));
    for (auto& move : mv.witness.inverted().moves) wit.push(std::move(move));
    verdict.witness = std::move(wit);
    return verdict;
  }
  if (!level.exhausted) {
    verdict.outcome = EquivOutcome::Undecided;
    return verdict;
  }
  verdict.outcome = EquivOutcome::NotEquivalent;
  return verdict;
}

PrimitivityVerdict is_primitive(const Word& u) {
  PrimitivityVerdict verdict;
  auto& stats = verdict.stats;

  const TrimReport trim = cyclic_trim(u);
  stats.letters_examined += 2 * (trim.steps + 1);
  const Word& core = trim.result;

  // Fast filter: a complete Whitehead graph of any initial segment blocks
  // primitivity, and the check per letter is constant time.
  ScanState scan(u.rank());
  for (Letter l : core.letters()) {
    scan.push(l);
    ++stats.filter_letters;
    ++stats.letters_examined;
    if (scan.complete()) {
      stats.filter_conclusive = true;
      verdict.primitive = false;
      return verdict;
    }
  }

  const MinimizationResult min = greedy_minimize(canonical_cyclic(core));
  stats.letters_examined += min.letters_examined;
  verdict.primitive = min.minimal.size() == 1;
  return verdict;
}

OrbitEnumeration bounded_orbit_enumerate(const Word& u, std::size_t max_len,
                                         std::size_t budget) {
  const MinimizationResult min = greedy_minimize(canonical_cyclic(u));
  OrbitEnumeration out;
  if (min.minimal.size() > max_len) return out;  // nothing in the ball

  const auto moves = all_moves(u.rank());
  std::unordered_set<CyclicWord, CyclicWordHash> seen;
  std::deque<CyclicWord> frontier;
  seen.insert(min.minimal);
  out.elements.push_back(min.minimal);
  frontier.push_back(min.minimal);

  while (!frontier.empty()) {
    const CyclicWord cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& move : moves) {
      CyclicWord image = apply_cyclic(move, cur);
      if (image.size() > max_len || seen.contains(image)) continue;
      if (out.elements.size() >= budget) {
        out.complete = false;
        return out;
      }
      seen.insert(image);
      out.elements.push_back(image);
      frontier.push_back(image);
    }
  }
  return out;
}

namespace {

bool has_cyclic_factor(const CyclicWord& v, const Word& pattern) {
  if (pattern.empty()) return true;
  if (pattern.size() > v.size()) return false;
  return kmp_find_cyclic(v.letters(), v.size() + pattern.size() - 1,
                         pattern.letters());
}

}  // namespace

BlockingVerdict blocking_check(const Word& u, const Word& pattern,
                               std::size_t max_len, std::size_t budget) {
  BlockingVerdict verdict;
  verdict.bound = max_len;
  const OrbitEnumeration orbit = bounded_orbit_enumerate(u, max_len, budget);
  for (const auto& v : orbit.elements) {
    ++verdict.elements_scanned;
    if (has_cyclic_factor(v, pattern)) {
      verdict.status = BlockingVerdict::Status::FoundAsSubword;
      verdict.element = v;
      return verdict;
    }
  }
  verdict.status = orbit.complete ? BlockingVerdict::Status::BlockedUpTo
                                  : BlockingVerdict::Status::BudgetExceeded;
  return verdict;
}

}  // namespace fg
