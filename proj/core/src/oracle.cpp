#include "spokecycles/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "spokecycles/parallel.hpp"

namespace spokecycles {

namespace {

// Depth-first extension of a path anchored at its minimum vertex. A cycle is
// reported when the path can close back to the anchor; it is reported once
// by requiring the second vertex to be smaller than the last.
template <typename OnCycle>
void cycles_at_anchor(const SimpleGraph& g, Vertex anchor, OnCycle&& on_cycle) {
  std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<Vertex> path{anchor};
  on_path[static_cast<std::size_t>(anchor)] = 1;

  auto extend = [&](auto&& self) -> void {
    const Vertex tip = path.back();
    for (Vertex w : g.neighbors(tip)) {
      if (w == anchor) {
        if (path.size() >= 3 && path[1] < tip) on_cycle(path);
        continue;
      }
      if (w < anchor || on_path[static_cast<std::size_t>(w)]) continue;
      on_path[static_cast<std::size_t>(w)] = 1;
      path.push_back(w);
      self(self);
      path.pop_back();
      on_path[static_cast<std::size_t>(w)] = 0;
    }
  };
  extend(extend);
}

void check_cap(const SimpleGraph& g, const OracleOptions& options) {
  if (g.vertex_count() > options.max_vertices) {
    throw CapExceeded("oracle cap is " + std::to_string(options.max_vertices) +
                      " vertices, graph has " + std::to_string(g.vertex_count()));
  }
}

void check_cycle_space_bound(const SimpleGraph& g, CycleCount count) {
  const int r = cyclomatic_number(g);
  if (r >= 64) return;  // bound exceeds any 64-bit count
  const CycleCount bound = (CycleCount{1} << r) - 1;
  if (count > bound) {
    throw std::logic_error("cycle count " + std::to_string(count) + " exceeds 2^r - 1 = " +
                           std::to_string(bound));
  }
}

}  // namespace

int cyclomatic_number(const SimpleGraph& g) {
  return static_cast<int>(g.edge_count()) - g.vertex_count() + g.component_count();
}

CycleList enumerate_all_cycles(const SimpleGraph& g, const OracleOptions& options) {
  check_cap(g, options);
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::vector<std::vector<Vertex>>> per_anchor(n);
  run_tasks(n, options.jobs, [&](std::size_t a) {
    cycles_at_anchor(g, static_cast<Vertex>(a),
                     [&](const std::vector<Vertex>& p) { per_anchor[a].push_back(p); });
  });
  CycleList out;
  for (auto& list : per_anchor) {
    for (auto& c : list) out.cycles.push_back(std::move(c));
  }
  std::sort(out.cycles.begin(), out.cycles.end());
  check_cycle_space_bound(g, out.cycles.size());
  return out;
}

CycleCount count_all_cycles(const SimpleGraph& g, const OracleOptions& options) {
  check_cap(g, options);
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<CycleCount> per_anchor(n, 0);
  run_tasks(n, options.jobs, [&](std::size_t a) {
    cycles_at_anchor(g, static_cast<Vertex>(a),
                     [&](const std::vector<Vertex>&) { ++per_anchor[a]; });
  });
  CycleCount total = 0;
  for (CycleCount c : per_anchor) total += c;
  check_cycle_space_bound(g, total);
  return total;
}

}  // namespace spokecycles
