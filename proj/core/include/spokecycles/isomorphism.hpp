#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "spokecycles/graph.hpp"

namespace spokecycles {

/// Adjacency matrix of a graph under its canonical labeling, one 64-bit row
/// per vertex. Two graphs are isomorphic iff their forms are equal.
struct CanonicalForm {
  int vertex_count = 0;
  std::vector<std::uint64_t> rows;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Canonical labeling by individualization-refinement. Colours start from
/// (degree, triangles at v, 4-cycles at v) and are refined to an equitable
/// partition; every branch of the search tree is explored, so the result is
/// exact. Throws CapExceeded above 64 vertices.
CanonicalForm canonical_form(const SimpleGraph& g);

/// The graph relabeled canonically.
SimpleGraph canonical_graph(const SimpleGraph& g);

bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b);

}  // namespace spokecycles
