#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fg/word.hpp"

namespace fg {

// Whitehead graph: a multigraph on the 2r letters X^{+-1}. Every adjacent
// pair (p, q) of a word contributes one edge {vertex(p), vertex(q^-1)};
// the optional external edge joins the last letter to the inverse of the
// first, closing the cycle of a cyclically reduced word.
//
// Multiplicities are stored, but the structural predicates (completeness,
// cut vertices, isolated edges) evaluate the underlying simple graph.
class WhGraph {
 public:
  explicit WhGraph(Rank rank);

  Rank rank() const { return rank_; }
  int vertex_count() const { return rank_.alphabet_size(); }

  int multiplicity(int u, int v) const { return adj_[idx(u, v)]; }
  std::uint64_t total_multiplicity() const { return total_; }
  bool includes_external() const { return external_.has_value(); }
  std::optional<std::pair<int, int>> external_edge() const { return external_; }

  void add_adjacent_pair(Letter p, Letter q);
  void add_external(Letter last, Letter first);

  // Graphviz text. Vertices "a","A","b","B",... in index order, one edge
  // line per unit of multiplicity, external edge marked style=dashed.
  std::string dot() const;

  friend bool operator==(const WhGraph& a, const WhGraph& b) {
    return a.rank_ == b.rank_ && a.adj_ == b.adj_ && a.external_ == b.external_;
  }

 private:
  std::size_t idx(int u, int v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(vertex_count()) +
           static_cast<std::size_t>(v);
  }
  void add_edge(int u, int v);

  Rank rank_;
  std::vector<int> adj_;  // symmetric 2r x 2r multiplicity matrix
  std::uint64_t total_ = 0;
  std::optional<std::pair<int, int>> external_;
};

// Builds Wh(w). With include_external the word must be nonempty and
// cyclically reduced (the external edge encodes the cyclic adjacency).
WhGraph build_graph(const Word& w, bool include_external);
WhGraph build_graph(const CyclicWord& w, bool include_external);

// Every pair of distinct vertices joined by at least one edge. Constant
// time in the word length (the graph has 2r vertices).
bool is_complete(const WhGraph& g);

// A vertex whose removal (with incident edges) increases the number of
// connected components; isolated vertices count as components.
bool has_cut_vertex(const WhGraph& g);

// A connected component consisting of exactly two vertices joined by at
// least one edge.
bool has_isolated_edge(const WhGraph& g);

// Incremental Whitehead graph of a growing freely reduced segment,
// external edge excluded. A counter of still-missing vertex pairs makes
// the completeness check O(1) per pushed letter.
class ScanState {
 public:
  explicit ScanState(Rank rank);

  // Appends one letter; it must not cancel against the previous one.
  void push(Letter l);

  bool complete() const { return missing_pairs_ == 0; }
  int missing_pairs() const { return missing_pairs_; }
  std::size_t letters_read() const { return letters_read_; }
  std::optional<Letter> last_letter() const { return last_; }
  const WhGraph& graph() const { return graph_; }

 private:
  WhGraph graph_;
  std::optional<Letter> last_;
  int missing_pairs_;
  std::size_t letters_read_ = 0;
};

// Functional flavor of ScanState::push.
ScanState scan_push(const ScanState& state, Letter l);

}  // namespace fg
