#pragma once

#include <string_view>

#include "spokecycles/graph.hpp"

namespace spokecycles {

/// H_2n: the cycle v0..v(2n-1) with spokes
///   e0 = v1 v(2n-1),
///   e_i = v(i-1) v(2n-i-2) for odd i, 1 <= i < n-1,
///   e_i = v(i+1) v(2n-i)   for even i, 2 <= i < n-1,
///   e(n-1) = v(n-1) v(n+1) if n is odd, v(n-2) v(n) if n is even.
/// graph.spoke(i) is e_i.
struct H2nGraph {
  int n = 0;
  ChordedCycleGraph graph;
  Edge alpha;  // (v0, v(2n-1))
  Edge beta;   // (v(n-1), v(n))
  /// Checked per instance rather than assumed.
  bool three_connected = false;

  [[nodiscard]] const Edge& spoke(std::size_t i) const { return graph.spoke(i); }
};

/// Throws std::invalid_argument for n < 2.
H2nGraph construct_h2n(int n);

/// Vertex i stands for spoke e_i; i ~ j iff e_i and e_j intersect.
SimpleGraph intersection_graph(const H2nGraph& h);

enum class ReductionEdge { alpha, beta, e0, e_last };

std::string_view to_string(ReductionEdge which);
/// Accepts "alpha", "beta", "e0", "e_last"; throws std::invalid_argument.
ReductionEdge parse_reduction_edge(std::string_view text);

Edge reduction_edge(const H2nGraph& h, ReductionEdge which);

/// H_2n with the designated edge deleted and its endpoints suppressed.
SimpleGraph reduce_h2n(int n, ReductionEdge which);

/// Whether reduce_h2n(n, which) is isomorphic to H_(2n-2). Requires n >= 3;
/// suppression errors propagate.
bool verify_reduction(int n, ReductionEdge which);

}  // namespace spokecycles
