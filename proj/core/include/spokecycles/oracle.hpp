#pragma once

#include <vector>

#include "spokecycles/cycle_engine.hpp"
#include "spokecycles/graph.hpp"

namespace spokecycles {

/// Each cycle is a vertex sequence starting at its lowest vertex, with the
/// smaller of that vertex's two cycle-neighbours second. Sorted.
struct CycleList {
  std::vector<std::vector<Vertex>> cycles;

  [[nodiscard]] std::size_t size() const { return cycles.size(); }
};

struct OracleOptions {
  int max_vertices = 20;
  /// Anchors are split across workers; output order does not depend on it.
  unsigned jobs = 1;
};

/// Every simple cycle exactly once, by backtracking over paths that only
/// visit vertices above their anchor. Throws CapExceeded above
/// options.max_vertices. Checks the result against 2^r - 1 with r the
/// cyclomatic number and throws std::logic_error if it is exceeded.
CycleList enumerate_all_cycles(const SimpleGraph& g, const OracleOptions& options = {});

/// Same count as enumerate_all_cycles without storing the cycles.
CycleCount count_all_cycles(const SimpleGraph& g, const OracleOptions& options = {});

/// |E| - |V| + (number of components).
int cyclomatic_number(const SimpleGraph& g);

}  // namespace spokecycles
