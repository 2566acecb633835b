#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "fg/automorphism.hpp"
#include "fg/minimize.hpp"
#include "fg/word.hpp"

namespace fg {

inline constexpr std::size_t kDefaultVertexCap = 1'000'000;

// The level set of a minimal cyclic word: all orbit members of the same
// length, discovered by BFS over elementary moves (type II moves that
// preserve the length, plus all letter permutations). Connected by
// Whitehead's theorem, so BFS finds every member when it runs to closure.
struct OrbitLevelGraph {
  CyclicWord root;
  std::vector<CyclicWord> vertices;  // discovery order; root first
  std::unordered_map<CyclicWord, std::pair<CyclicWord, ElementaryAut>,
                     CyclicWordHash>
      parent;                        // child -> (parent, move); root absent
  bool exhausted = true;             // false: the vertex cap stopped the BFS
  std::uint64_t letters_examined = 0;

  bool contains(const CyclicWord& w) const;
  // Moves mapping root to w (empty witness for the root itself).
  AutWitness path_from_root(const CyclicWord& w) const;
};

// BFS from w, which must be minimal (throws std::invalid_argument if not).
OrbitLevelGraph level_graph(const CyclicWord& w,
                            std::size_t cap = kDefaultVertexCap);

enum class EquivOutcome { Equivalent, NotEquivalent, Undecided };
enum class EquivPath { FastSM, LengthMismatch, LevelSearch };

struct EquivStats {
  std::uint64_t letters_examined = 0;
  std::uint64_t vertices_explored = 0;
};

struct EquivVerdict {
  explicit EquivVerdict(Rank rank) : u_min(rank), v_min(rank) {}

  EquivOutcome outcome = EquivOutcome::NotEquivalent;
  // Present iff equivalent; maps canonical_cyclic(u) to canonical_cyclic(v).
  std::optional<AutWitness> witness;
  EquivPath path = EquivPath::FastSM;
  EquivStats stats;
  CyclicWord u_min, v_min;  // greedy-minimal forms of the two inputs

  bool equivalent() const { return outcome == EquivOutcome::Equivalent; }
};

// Decides whether some automorphism takes u to v, at conjugacy-class level
// (inner automorphisms absorb the conjugacy discrepancy, so this equals
// element-level equivalence). Stage order: cyclic trim; strict-minimality
// fast path with a KMP permutation scan; greedy minimization with length
// comparison; level-set BFS membership. Undecided only when the BFS hits
// the vertex cap.
EquivVerdict same_orbit(const Word& u, const Word& v,
                        std::size_t cap = kDefaultVertexCap);

struct PrimitivityStats {
  std::uint64_t filter_letters = 0;   // letters the completeness filter read
  bool filter_conclusive = false;     // filter alone decided (graph complete)
  std::uint64_t letters_examined = 0; // total work, minimization included
};

struct PrimitivityVerdict {
  bool primitive = false;
  PrimitivityStats stats;
};

// Is u an image of x_1 under some automorphism? Cyclically trims, then
// runs the incremental completeness filter over the core (a complete
// Whitehead graph of any prefix proves non-primitivity immediately); if
// the filter is inconclusive, minimizes and tests for cyclic length 1.
PrimitivityVerdict is_primitive(const Word& u);

struct OrbitEnumeration {
  std::vector<CyclicWord> elements;  // discovery order; minimal form first
  bool complete = true;              // false: vertex budget exhausted
};

// All cyclic words of length <= max_len in the orbit of u: closure of the
// minimal form under elementary moves, pruned at max_len. Exhaustive when
// complete, by peak reduction (any orbit member of length <= max_len is
// reachable from the minimum through words of length <= max_len).
OrbitEnumeration bounded_orbit_enumerate(const Word& u, std::size_t max_len,
                                         std::size_t budget = kDefaultVertexCap);

struct BlockingVerdict {
  enum class Status { FoundAsSubword, BlockedUpTo, BudgetExceeded };
  Status status = Status::BlockedUpTo;
  std::optional<CyclicWord> element;  // first orbit member containing the pattern
  std::size_t bound = 0;              // the length bound searched
  std::size_t elements_scanned = 0;
};

// Searches the bounded orbit of u for an element with `pattern` as a
// cyclic factor (a subword of some rotation representative, i.e. of v*v
// truncated to |v| + |pattern| - 1).
BlockingVerdict blocking_check(const Word& u, const Word& pattern,
                               std::size_t max_len,
                               std::size_t budget = kDefaultVertexCap);

}  // namespace fg
