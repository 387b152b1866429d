#include "spokecycles/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <vector>

namespace spokecycles {

namespace {

bool connected_without(const SimpleGraph& g, Vertex a, Vertex b) {
  const int n = g.vertex_count();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  if (a >= 0) seen[static_cast<std::size_t>(a)] = 1;
  if (b >= 0) seen[static_cast<std::size_t>(b)] = 1;
  Vertex start = -1;
  int remaining = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!seen[static_cast<std::size_t>(v)]) {
      ++remaining;
      if (start < 0) start = v;
    }
  }
  if (remaining <= 1) return true;
  std::vector<Vertex> stack{start};
  seen[static_cast<std::size_t>(start)] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == remaining;
}

// Max number of internally vertex-disjoint s-t paths, for non-adjacent s,t.
int disjoint_paths(const SimpleGraph& g, Vertex s, Vertex t) {
  // Node x splits into in = 2x, out = 2x+1 with capacity 1 (inf for s, t).
  const int n = g.vertex_count();
  const int nodes = 2 * n;
  struct Arc {
    int to;
    int cap;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out(static_cast<std::size_t>(nodes));
  auto add = [&](int from, int to, int cap) {
    out[static_cast<std::size_t>(from)].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({to, cap});
    out[static_cast<std::size_t>(to)].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({from, 0});
  };
  const int inf = n + 1;
  for (Vertex v = 0; v < n; ++v) add(2 * v, 2 * v + 1, (v == s || v == t) ? inf : 1);
  for (const Edge& e : g.edges()) {
    add(2 * e.u + 1, 2 * e.v, inf);
    add(2 * e.v + 1, 2 * e.u, inf);
  }
  const int source = 2 * s + 1;
  const int sink = 2 * t;
  int flow = 0;
  std::vector<int> via(static_cast<std::size_t>(nodes));
  for (;;) {
    std::fill(via.begin(), via.end(), -1);
    std::queue<int> q;
    q.push(source);
    via[static_cast<std::size_t>(source)] = -2;
    while (!q.empty() && via[static_cast<std::size_t>(sink)] == -1) {
      const int x = q.front();
      q.pop();
      for (int id : out[static_cast<std::size_t>(x)]) {
        const Arc& a = arcs[static_cast<std::size_t>(id)];
        if (a.cap > 0 && via[static_cast<std::size_t>(a.to)] == -1) {
          via[static_cast<std::size_t>(a.to)] = id;
          q.push(a.to);
        }
      }
    }
    if (via[static_cast<std::size_t>(sink)] == -1) return flow;
    for (int x = sink; x != source;) {
      const int id = via[static_cast<std::size_t>(x)];
      arcs[static_cast<std::size_t>(id)].cap -= 1;
      arcs[static_cast<std::size_t>(id ^ 1)].cap += 1;
      x = arcs[static_cast<std::size_t>(id ^ 1)].to;
    }
    ++flow;
  }
}

}  // namespace

bool is_three_connected(const SimpleGraph& g) {
  const int n = g.vertex_count();
  if (n < 4) throw GraphError("3-connectivity needs at least 4 vertices");
  if (!g.is_connected()) return false;
  for (Vertex a = 0; a < n; ++a) {
    if (!connected_without(g, a, -1)) return false;
    for (Vertex b = a + 1; b < n; ++b) {
      if (!connected_without(g, a, b)) return false;
    }
  }
  return true;
}

bool is_three_connected_chorded(std::span<const Vertex> partner) {
  const auto n = static_cast<Vertex>(partner.size());
  // Removing a, b with a < b leaves the arcs (a, b) and (b, a).
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 2; b < n; ++b) {
      if (a == 0 && b == n - 1) continue;
      bool joined = false;
      for (Vertex x = a + 1; x < b && !joined; ++x) {
        const Vertex y = partner[static_cast<std::size_t>(x)];
        joined = y != a && y != b && (y < a || y > b);
      }
      if (!joined) return false;
    }
  }
  return true;
}

bool is_three_connected(const ChordedCycleGraph& g) {
  return is_three_connected_chorded(g.partners());
}

int vertex_connectivity(const SimpleGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  if (!g.is_connected()) return 0;
  int best = n - 1;
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = s + 1; t < n; ++t) {
      if (g.has_edge(s, t)) continue;
      best = std::min(best, disjoint_paths(g, s, t));
    }
  }
  return best;
}

}  // namespace spokecycles
