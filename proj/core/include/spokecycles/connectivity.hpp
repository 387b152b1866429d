#pragma once

#include <span>

#include "spokecycles/graph.hpp"

namespace spokecycles {

/// Exact 3-vertex-connectivity test: true iff no set of at most two vertices
/// separates the graph. Throws GraphError when the graph has fewer than four
/// vertices. Disconnected input yields false.
bool is_three_connected(const SimpleGraph& g);

/// Same predicate on a chorded cycle. The hamiltonian cycle already rules
/// out cut vertices, so it is enough that for every non-adjacent pair {a, b}
/// some spoke joins the two open arcs between them.
bool is_three_connected(const ChordedCycleGraph& g);

/// Partner-array form of the chorded test used by the exhaustive scan.
bool is_three_connected_chorded(std::span<const Vertex> partner);

/// Vertex connectivity via unit-capacity max flow on the split graph
/// (minimum over non-adjacent pairs of vertex-disjoint s-t paths; V-1 for
/// complete graphs). Independent of the routines above.
int vertex_connectivity(const SimpleGraph& g);

}  // namespace spokecycles
