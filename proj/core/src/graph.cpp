#include "spokecycles/graph.hpp"

#include <algorithm>
#include <numeric>

namespace spokecycles {

std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

SimpleGraph::SimpleGraph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 0) throw GraphError("negative vertex count");
  std::sort(edges_.begin(), edges_.end());
  adjacency_.resize(static_cast<std::size_t>(vertex_count_));
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.v >= vertex_count_) {
      throw GraphError("edge " + to_string(e) + " out of range");
    }
    if (e.u == e.v) throw GraphError("loop at vertex " + std::to_string(e.u));
    if (i > 0 && edges_[i - 1] == e) throw GraphError("parallel edge " + to_string(e));
    adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

bool SimpleGraph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= vertex_count_ || b >= vertex_count_) return false;
  const auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

int SimpleGraph::component_count() const {
  std::vector<char> seen(static_cast<std::size_t>(vertex_count_), 0);
  std::vector<Vertex> stack;
  int components = 0;
  for (Vertex s = 0; s < vertex_count_; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    ++components;
    seen[static_cast<std::size_t>(s)] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : neighbors(v)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return components;
}

bool SimpleGraph::is_connected() const { return component_count() <= 1; }

ChordedCycleGraph ChordedCycleGraph::build(
    int vertex_count, std::span<const std::pair<Vertex, Vertex>> spoke_pairs) {
  if (vertex_count < 4 || vertex_count % 2 != 0) {
    throw GraphError("vertex count must be even and at least 4, got " +
                     std::to_string(vertex_count));
  }
  const auto n = static_cast<std::size_t>(vertex_count);
  if (spoke_pairs.size() * 2 != n) {
    throw GraphError("expected " + std::to_string(n / 2) + " spokes, got " +
                     std::to_string(spoke_pairs.size()));
  }
  ChordedCycleGraph g;
  g.vertex_count_ = vertex_count;
  g.partner_.assign(n, -1);
  g.spoke_of_vertex_.assign(n, 0);
  for (std::size_t i = 0; i < spoke_pairs.size(); ++i) {
    const auto [a, b] = spoke_pairs[i];
    const Edge e(a, b);
    if (e.u < 0 || e.v >= vertex_count) {
      throw GraphError("spoke " + to_string(e) + " out of range");
    }
    if (e.u == e.v) throw GraphError("spoke " + to_string(e) + " is a loop");
    if (e.v == e.u + 1 || (e.u == 0 && e.v == vertex_count - 1)) {
      throw GraphError("spoke " + to_string(e) + " joins cycle-adjacent vertices");
    }
    for (Vertex x : {e.u, e.v}) {
      if (g.partner_[static_cast<std::size_t>(x)] != -1) {
        throw GraphError("vertex " + std::to_string(x) + " lies on two spokes");
      }
    }
    g.partner_[static_cast<std::size_t>(e.u)] = e.v;
    g.partner_[static_cast<std::size_t>(e.v)] = e.u;
    g.spoke_of_vertex_[static_cast<std::size_t>(e.u)] = i;
    g.spoke_of_vertex_[static_cast<std::size_t>(e.v)] = i;
    g.spokes_.push_back(e);
  }
  return g;
}

ChordedCycleGraph ChordedCycleGraph::from_partners(std::span<const Vertex> partner) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t v = 0; v < partner.size(); ++v) {
    const Vertex w = partner[v];
    if (w < 0 || static_cast<std::size_t>(w) >= partner.size() ||
        partner[static_cast<std::size_t>(w)] != static_cast<Vertex>(v)) {
      throw GraphError("partner array is not an involution at vertex " + std::to_string(v));
    }
    if (static_cast<Vertex>(v) < w) pairs.emplace_back(static_cast<Vertex>(v), w);
  }
  return build(static_cast<int>(partner.size()), pairs);
}

std::optional<std::size_t> ChordedCycleGraph::spoke_index(const Edge& e) const {
  if (e.u < 0 || e.v >= vertex_count_) return std::nullopt;
  if (partner(e.u) != e.v) return std::nullopt;
  return spoke_at(e.u);
}

bool ChordedCycleGraph::is_cycle_edge(const Edge& e) const {
  if (e.u < 0 || e.v >= vertex_count_ || e.u == e.v) return false;
  return e.v == e.u + 1 || (e.u == 0 && e.v == vertex_count_ - 1);
}

std::optional<CycleEdgeSet> CycleEdgeSet::from_edges(std::vector<Edge> edges) {
  if (edges.size() < 3) return std::nullopt;
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) return std::nullopt;

  std::vector<Vertex> verts;
  for (const Edge& e : edges) {
    verts.push_back(e.u);
    verts.push_back(e.v);
  }
  std::sort(verts.begin(), verts.end());
  // 2-regular: every vertex appears exactly twice.
  for (std::size_t i = 0; i < verts.size(); i += 2) {
    if (verts[i] != verts[i + 1]) return std::nullopt;
    if (i + 2 < verts.size() && verts[i + 2] == verts[i]) return std::nullopt;
  }
  // Connected: walk from the lowest vertex and count edges traversed.
  const Vertex start = verts.front();
  Vertex prev = -1;
  Vertex cur = start;
  std::size_t steps = 0;
  do {
    Vertex next = -1;
    for (const Edge& e : edges) {
      if (e.touches(cur) && e.other(cur) != prev) {
        next = e.other(cur);
        break;
      }
    }
    if (next == -1) return std::nullopt;
    prev = cur;
    cur = next;
    ++steps;
  } while (cur != start && steps <= edges.size());
  if (steps != edges.size()) return std::nullopt;
  return CycleEdgeSet(std::move(edges));
}

bool CycleEdgeSet::contains(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

SimpleGraph to_simple(const ChordedCycleGraph& g) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(g.vertex_count()) * 3 / 2);
  for (Vertex v = 0; v < g.vertex_count(); ++v) edges.emplace_back(v, g.next(v));
  for (const Edge& s : g.spokes()) edges.push_back(s);
  return {g.vertex_count(), std::move(edges)};
}

SimpleGraph delete_and_suppress(const SimpleGraph& g, const Edge& e) {
  if (!g.has_edge(e.u, e.v)) throw GraphError("edge " + to_string(e) + " not in graph");
  if (g.degree(e.u) != 3 || g.degree(e.v) != 3) {
    throw GraphError("endpoints of " + to_string(e) + " must have degree 3");
  }
  std::vector<Edge> edges;
  for (const Edge& x : g.edges()) {
    if (x != e) edges.push_back(x);
  }
  auto suppress = [&edges](Vertex x) {
    std::vector<Vertex> nb;
    std::vector<Edge> kept;
    for (const Edge& y : edges) {
      if (y.touches(x)) {
        nb.push_back(y.other(x));
      } else {
        kept.push_back(y);
      }
    }
    if (nb[0] == nb[1]) {
      throw GraphError("suppressing vertex " + std::to_string(x) + " creates a loop");
    }
    const Edge joined(nb[0], nb[1]);
    if (std::find(kept.begin(), kept.end(), joined) != kept.end()) {
      throw GraphError("suppressing vertex " + std::to_string(x) +
                       " creates parallel edge " + to_string(joined));
    }
    kept.push_back(joined);
    edges = std::move(kept);
  };
  suppress(e.u);
  suppress(e.v);

  std::vector<Vertex> relabel(static_cast<std::size_t>(g.vertex_count()), -1);
  Vertex next = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (v != e.u && v != e.v) relabel[static_cast<std::size_t>(v)] = next++;
  }
  for (Edge& x : edges) {
    x = Edge(relabel[static_cast<std::size_t>(x.u)], relabel[static_cast<std::size_t>(x.v)]);
  }
  return {g.vertex_count() - 2, std::move(edges)};
}

ChordedCycleGraph random_chorded_graph(int vertex_count, std::mt19937_64& rng) {
  if (vertex_count < 6 || vertex_count % 2 != 0) {
    // V = 4 admits exactly one matching (K4); keep the sampler honest.
    if (vertex_count == 4) return ChordedCycleGraph::build(4, {{0, 2}, {1, 3}});
    throw GraphError("vertex count must be even and at least 4");
  }
  std::vector<Vertex> order(static_cast<std::size_t>(vertex_count));
  std::iota(order.begin(), order.end(), 0);
  std::vector<Vertex> partner(order.size());
  for (;;) {
    std::shuffle(order.begin(), order.end(), rng);
    bool ok = true;
    for (std::size_t i = 0; i < order.size() && ok; i += 2) {
      const Vertex a = order[i];
      const Vertex b = order[i + 1];
      const int d = a > b ? a - b : b - a;
      ok = d != 1 && d != vertex_count - 1;
      partner[static_cast<std::size_t>(a)] = b;
      partner[static_cast<std::size_t>(b)] = a;
    }
    if (ok) return ChordedCycleGraph::from_partners(partner);
  }
}

}  // namespace spokecycles
