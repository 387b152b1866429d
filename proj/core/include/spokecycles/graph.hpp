#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spokecycles {

using Vertex = int;

/// Raised for malformed graphs and for operations whose preconditions on
/// graph structure are not met.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an input exceeds a configured size cap.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  [[nodiscard]] bool touches(Vertex x) const { return u == x || v == x; }
  [[nodiscard]] Vertex other(Vertex x) const { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

/// Simple undirected graph on vertices [0, vertex_count). Edges are kept
/// sorted and deduplicated; adjacency lists are sorted.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  /// Throws GraphError on loops, parallel edges or out-of-range endpoints.
  SimpleGraph(int vertex_count, std::vector<Edge> edges);

  [[nodiscard]] int vertex_count() const { return vertex_count_; }
  [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const {
    return adjacency_.at(static_cast<std::size_t>(v));
  }
  [[nodiscard]] int degree(Vertex v) const {
    return static_cast<int>(neighbors(v).size());
  }
  [[nodiscard]] bool has_edge(Vertex a, Vertex b) const;
  [[nodiscard]] bool is_connected() const;
  [[nodiscard]] int component_count() const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// A cubic graph given as the hamiltonian cycle 0-1-...-(V-1)-0 plus a
/// perfect matching of chords ("spokes"). Spoke i is spokes()[i]; the order
/// is the one supplied at construction.
class ChordedCycleGraph {
 public:
  /// Validates and builds. Throws GraphError when vertex_count is odd or
  /// below 4, when the pairs are not a perfect matching, when an index is out
  /// of range, or when a pair joins two cycle-adjacent vertices.
  static ChordedCycleGraph build(int vertex_count,
                                 std::span<const std::pair<Vertex, Vertex>> spoke_pairs);
  static ChordedCycleGraph build(int vertex_count,
                                 std::initializer_list<std::pair<Vertex, Vertex>> spoke_pairs) {
    return build(vertex_count, std::span(spoke_pairs.begin(), spoke_pairs.size()));
  }
  /// Spokes ordered by their smaller endpoint.
  static ChordedCycleGraph from_partners(std::span<const Vertex> partner);

  [[nodiscard]] int vertex_count() const { return vertex_count_; }
  [[nodiscard]] std::size_t spoke_count() const { return spokes_.size(); }
  [[nodiscard]] const std::vector<Edge>& spokes() const { return spokes_; }
  [[nodiscard]] const Edge& spoke(std::size_t i) const { return spokes_.at(i); }
  [[nodiscard]] Vertex partner(Vertex v) const { return partner_.at(static_cast<std::size_t>(v)); }
  [[nodiscard]] const std::vector<Vertex>& partners() const { return partner_; }
  /// Index of the spoke incident with v.
  [[nodiscard]] std::size_t spoke_at(Vertex v) const {
    return spoke_of_vertex_.at(static_cast<std::size_t>(v));
  }
  [[nodiscard]] std::optional<std::size_t> spoke_index(const Edge& e) const;
  [[nodiscard]] bool is_cycle_edge(const Edge& e) const;
  [[nodiscard]] bool has_edge(const Edge& e) const {
    return is_cycle_edge(e) || spoke_index(e).has_value();
  }
  [[nodiscard]] Vertex next(Vertex v) const { return v + 1 == vertex_count_ ? 0 : v + 1; }
  [[nodiscard]] Vertex prev(Vertex v) const { return v == 0 ? vertex_count_ - 1 : v - 1; }

 private:
  ChordedCycleGraph() = default;

  int vertex_count_ = 0;
  std::vector<Vertex> partner_;
  std::vector<Edge> spokes_;
  std::vector<std::size_t> spoke_of_vertex_;
};

/// Edge set of a single cycle: a connected 2-regular subgraph.
class CycleEdgeSet {
 public:
  /// Returns nullopt unless the edges induce one connected 2-regular graph.
  static std::optional<CycleEdgeSet> from_edges(std::vector<Edge> edges);

  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] std::size_t length() const { return edges_.size(); }
  [[nodiscard]] bool contains(const Edge& e) const;

  friend bool operator==(const CycleEdgeSet&, const CycleEdgeSet&) = default;

 private:
  explicit CycleEdgeSet(std::vector<Edge> edges) : edges_(std::move(edges)) {}
  std::vector<Edge> edges_;
};

/// Cycle edges (i, i+1 mod V) followed by the spokes; 3V/2 edges.
SimpleGraph to_simple(const ChordedCycleGraph& g);

/// Removes e and suppresses both endpoints (each now of degree 2 is replaced
/// by an edge between its two remaining neighbours). Surviving vertices keep
/// their relative order. Throws GraphError if e is absent, an endpoint does
/// not have degree 3, or suppression would create a loop or parallel edge.
SimpleGraph delete_and_suppress(const SimpleGraph& g, const Edge& e);

/// Uniformly random spoke matching on V vertices with no cycle-adjacent
/// pair (rejection sampling). Not filtered for 3-connectivity.
ChordedCycleGraph random_chorded_graph(int vertex_count, std::mt19937_64& rng);

}  // namespace spokecycles
