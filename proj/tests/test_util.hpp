#pragma once

#include <utility>
#include <vector>

#include "spokecycles/graph.hpp"

namespace spokecycles::testing {

inline SimpleGraph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  }
  return SimpleGraph(n, std::move(edges));
}

inline SimpleGraph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return SimpleGraph(n, std::move(edges));
}

inline SimpleGraph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return SimpleGraph(n, std::move(edges));
}

/// Outer 5-cycle 0..4, spokes i - i+5, inner pentagram.
inline SimpleGraph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return SimpleGraph(10, std::move(edges));
}

/// Triangular prism as a chorded 6-cycle.
inline ChordedCycleGraph prism() { return ChordedCycleGraph::build(6, {{0, 2}, {1, 4}, {3, 5}}); }

/// K_{3,3} as a chorded 6-cycle.
inline ChordedCycleGraph k33() { return ChordedCycleGraph::build(6, {{0, 3}, {1, 4}, {2, 5}}); }

/// K4 as a chorded 4-cycle.
inline ChordedCycleGraph k4() { return ChordedCycleGraph::build(4, {{0, 2}, {1, 3}}); }

/// Relabels g by the permutation perm (vertex v becomes perm[v]).
inline SimpleGraph relabel(const SimpleGraph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    edges.emplace_back(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
  }
  return SimpleGraph(g.vertex_count(), std::move(edges));
}

}  // namespace spokecycles::testing
