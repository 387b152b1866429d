#include "spokecycles/h2n.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spokecycles/connectivity.hpp"
#include "spokecycles/isomorphism.hpp"
#include "spokecycles/spoke_analysis.hpp"

namespace spokecycles {

H2nGraph construct_h2n(int n) {
  if (n < 2) throw std::invalid_argument("H_2n needs n >= 2, got " + std::to_string(n));
  const int v = 2 * n;
  std::vector<std::pair<Vertex, Vertex>> spokes;
  spokes.emplace_back(1, v - 1);
  for (int i = 1; i < n - 1; ++i) {
    if (i % 2 == 1) {
      spokes.emplace_back(i - 1, v - i - 2);
    } else {
      spokes.emplace_back(i + 1, v - i);
    }
  }
  if (n % 2 == 1) {
    spokes.emplace_back(n - 1, n + 1);
  } else {
    spokes.emplace_back(n - 2, n);
  }

  H2nGraph h{n, ChordedCycleGraph::build(v, spokes), Edge(0, v - 1), Edge(n - 1, n), false};
  h.three_connected = is_three_connected(h.graph);
  return h;
}

SimpleGraph intersection_graph(const H2nGraph& h) {
  std::vector<Edge> edges;
  const std::size_t s = h.graph.spoke_count();
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = i + 1; j < s; ++j) {
      if (spokes_intersect(h.graph, i, j)) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return {static_cast<int>(s), std::move(edges)};
}

std::string_view to_string(ReductionEdge which) {
  switch (which) {
    case ReductionEdge::alpha:
      return "alpha";
    case ReductionEdge::beta:
      return "beta";
    case ReductionEdge::e0:
      return "e0";
    case ReductionEdge::e_last:
      return "e_last";
  }
  return "?";
}

ReductionEdge parse_reduction_edge(std::string_view text) {
  for (ReductionEdge e : {ReductionEdge::alpha, ReductionEdge::beta, ReductionEdge::e0,
                          ReductionEdge::e_last}) {
    if (text == to_string(e)) return e;
  }
  throw std::invalid_argument("unknown reduction edge '" + std::string(text) + "'");
}

Edge reduction_edge(const H2nGraph& h, ReductionEdge which) {
  switch (which) {
    case ReductionEdge::alpha:
      return h.alpha;
    case ReductionEdge::beta:
      return h.beta;
    case ReductionEdge::e0:
      return h.spoke(0);
    case ReductionEdge::e_last:
      return h.spoke(static_cast<std::size_t>(h.n - 1));
  }
  throw std::logic_error("unreachable");
}

SimpleGraph reduce_h2n(int n, ReductionEdge which) {
  if (n < 3) throw std::invalid_argument("reduction needs n >= 3");
  const H2nGraph h = construct_h2n(n);
  return delete_and_suppress(to_simple(h.graph), reduction_edge(h, which));
}

bool verify_reduction(int n, ReductionEdge which) {
  return are_isomorphic(reduce_h2n(n, which), to_simple(construct_h2n(n - 1).graph));
}

}  // namespace spokecycles
