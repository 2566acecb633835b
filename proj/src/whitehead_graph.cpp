#include "fg/whitehead_graph.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace fg {

WhGraph::WhGraph(Rank rank) : rank_(rank) {
  adj_.assign(static_cast<std::size_t>(vertex_count()) *
                  static_cast<std::size_t>(vertex_count()),
              0);
}

void WhGraph::add_edge(int u, int v) {
  assert(u != v);
  ++adj_[idx(u, v)];
  ++adj_[idx(v, u)];
  ++total_;
}

void WhGraph::add_adjacent_pair(Letter p, Letter q) {
  add_edge(p.vertex(), q.inverse().vertex());
}

void WhGraph::add_external(Letter last, Letter first) {
  assert(!external_.has_value());
  const int u = last.vertex();
  const int v = first.inverse().vertex();
  add_edge(u, v);
  external_ = std::make_pair(std::min(u, v), std::max(u, v));
}

std::string WhGraph::dot() const {
  std::string out = "graph wh {\n";
  for (int v = 0; v < vertex_count(); ++v) {
    out += "  \"";
    out += Letter::from_vertex(v).to_char();
    out += "\";\n";
  }
  for (int u = 0; u < vertex_count(); ++u) {
    for (int v = u + 1; v < vertex_count(); ++v) {
      int plain = multiplicity(u, v);
      const bool ext = external_ && external_->first == u && external_->second == v;
      if (ext) --plain;
      const std::string line = std::string("  \"") + Letter::from_vertex(u).to_char() +
                               "\" -- \"" + Letter::from_vertex(v).to_char() + "\"";
      for (int k = 0; k < plain; ++k) out += line + ";\n";
      if (ext) out += line + " [style=dashed];\n";
    }
  }
  out += "}\n";
  return out;
}

WhGraph build_graph(const Word& w, bool include_external) {
  if (include_external) {
    if (w.empty())
      throw std::invalid_argument("external edge requires a nonempty word");
    if (!w.cyclically_reduced())
      throw std::invalid_argument("external edge requires a cyclically reduced word");
  }
  WhGraph g(w.rank());
  const auto& ls = w.letters();
  for (std::size_t i = 0; i + 1 < ls.size(); ++i)
    g.add_adjacent_pair(ls[i], ls[i + 1]);
  if (include_external) g.add_external(ls.back(), ls.front());
  return g;
}

WhGraph build_graph(const CyclicWord& w, bool include_external) {
  return build_graph(w.representative(), include_external);
}

bool is_complete(const WhGraph& g) {
  const int n = g.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.multiplicity(u, v) == 0) return false;
  return true;
}

namespace {

// Articulation-point DFS (lowlink) over the simple graph underlying g.
struct CutSearch {
  const WhGraph& g;
  std::vector<int> disc, low;
  int timer = 0;
  bool found = false;

  explicit CutSearch(const WhGraph& graph)
      : g(graph),
        disc(static_cast<std::size_t>(graph.vertex_count()), -1),
        low(static_cast<std::size_t>(graph.vertex_count()), 0) {}

  void dfs(int u, int parent) {
    const auto ui = static_cast<std::size_t>(u);
    disc[ui] = low[ui] = timer++;
    int children = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (v == u || g.multiplicity(u, v) == 0) continue;
      const auto vi = static_cast<std::size_t>(v);
      if (disc[vi] == -1) {
        ++children;
        dfs(v, u);
        low[ui] = std::min(low[ui], low[vi]);
        if (parent != -1 && low[vi] >= disc[ui]) found = true;
      } else if (v != parent) {
        low[ui] = std::min(low[ui], disc[vi]);
      }
    }
    if (parent == -1 && children > 1) found = true;
  }
};

}  // namespace

bool has_cut_vertex(const WhGraph& g) {
  CutSearch search(g);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (search.disc[static_cast<std::size_t>(v)] == -1) search.dfs(v, -1);
  return search.found;
}

bool has_isolated_edge(const WhGraph& g) {
  const int n = g.vertex_count();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.multiplicity(u, v) == 0) continue;
      bool isolated = true;
      for (int t = 0; t < n && isolated; ++t) {
        if (t == u || t == v) continue;
        if (g.multiplicity(u, t) > 0 || g.multiplicity(v, t) > 0) isolated = false;
      }
      if (isolated) return true;
    }
  }
  return false;
}

ScanState::ScanState(Rank rank)
    : graph_(rank),
      missing_pairs_(rank.alphabet_size() * (rank.alphabet_size() - 1) / 2) {}

void ScanState::push(Letter l) {
  if (l.code == 0 || l.generator_index() >= graph_.rank().value())
    throw std::invalid_argument("letter out of rank range");
  if (last_ && *last_ == l.inverse())
    throw std::invalid_argument("scan_push: segment would not be freely reduced");
  if (last_) {
    const int u = last_->vertex();
    const int v = l.inverse().vertex();
    if (graph_.multiplicity(u, v) == 0) --missing_pairs_;
    graph_.add_adjacent_pair(*last_, l);
  }
  last_ = l;
  ++letters_read_;
}

ScanState scan_push(const ScanState& state, Letter l) {
  ScanState next = state;
  next.push(l);
  return next;
}

}  // namespace fg
