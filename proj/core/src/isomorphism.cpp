#include "spokecycles/isomorphism.hpp"

#include <algorithm>

namespace spokecycles {

namespace {

constexpr int kMaxVertices = 64;

class Canonizer {
 public:
  explicit Canonizer(const SimpleGraph& g) : g_(g), n_(g.vertex_count()) {}

  CanonicalForm run() {
    std::vector<int> colors = initial_colors();
    refine(colors);
    search(colors);
    return {n_, std::move(best_)};
  }

 private:
  // Ranks arbitrary per-vertex keys into dense colours 0..k-1 in key order.
  template <typename Key>
  static int rank_keys(const std::vector<Key>& keys, std::vector<int>& colors) {
    std::vector<Key> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t v = 0; v < keys.size(); ++v) {
      colors[v] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
    }
    return static_cast<int>(sorted.size());
  }

  std::vector<int> initial_colors() const {
    std::vector<std::vector<int>> keys(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) {
      const auto nb = g_.neighbors(v);
      int triangles = 0;
      int squares = 0;
      for (std::size_t i = 0; i < nb.size(); ++i) {
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
          if (g_.has_edge(nb[i], nb[j])) ++triangles;
          // Common neighbours of nb[i], nb[j] other than v close a 4-cycle.
          for (Vertex x : g_.neighbors(nb[i])) {
            if (x != v && g_.has_edge(x, nb[j])) ++squares;
          }
        }
      }
      keys[static_cast<std::size_t>(v)] = {g_.degree(v), triangles, squares};
    }
    std::vector<int> colors(static_cast<std::size_t>(n_));
    rank_keys(keys, colors);
    return colors;
  }

  void refine(std::vector<int>& colors) const {
    int cells = -1;
    std::vector<std::vector<int>> keys(static_cast<std::size_t>(n_));
    for (;;) {
      for (Vertex v = 0; v < n_; ++v) {
        auto& key = keys[static_cast<std::size_t>(v)];
        key.clear();
        key.push_back(colors[static_cast<std::size_t>(v)]);
        for (Vertex w : g_.neighbors(v)) key.push_back(colors[static_cast<std::size_t>(w)]);
        std::sort(key.begin() + 1, key.end());
      }
      const int next = rank_keys(keys, colors);
      if (next == cells) return;
      cells = next;
    }
  }

  void search(const std::vector<int>& colors) {
    // Target cell: the smallest non-singleton cell, lowest colour first.
    std::vector<int> cell_size(static_cast<std::size_t>(n_), 0);
    for (int c : colors) ++cell_size[static_cast<std::size_t>(c)];
    int target = -1;
    for (int c = 0; c < n_; ++c) {
      const int s = cell_size[static_cast<std::size_t>(c)];
      if (s > 1 && (target < 0 || s < cell_size[static_cast<std::size_t>(target)])) target = c;
    }
    if (target < 0) {
      leaf(colors);
      return;
    }
    std::vector<int> child(colors.size());
    for (Vertex v = 0; v < n_; ++v) {
      if (colors[static_cast<std::size_t>(v)] != target) continue;
      std::vector<std::pair<int, int>> keys(colors.size());
      for (std::size_t u = 0; u < colors.size(); ++u) {
        keys[u] = {colors[u], static_cast<Vertex>(u) == v ? 0 : 1};
      }
      rank_keys(keys, child);
      refine(child);
      search(child);
    }
  }

  void leaf(const std::vector<int>& colors) {
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n_), 0);
    for (const Edge& e : g_.edges()) {
      const int a = colors[static_cast<std::size_t>(e.u)];
      const int b = colors[static_cast<std::size_t>(e.v)];
      rows[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
      rows[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
    }
    if (!have_best_ || rows < best_) {
      best_ = std::move(rows);
      have_best_ = true;
    }
  }

  const SimpleGraph& g_;
  int n_;
  std::vector<std::uint64_t> best_;
  bool have_best_ = false;
};

}  // namespace

CanonicalForm canonical_form(const SimpleGraph& g) {
  if (g.vertex_count() > kMaxVertices) {
    throw CapExceeded("canonical labeling supports at most 64 vertices");
  }
  return Canonizer(g).run();
}

SimpleGraph canonical_graph(const SimpleGraph& g) {
  const CanonicalForm form = canonical_form(g);
  std::vector<Edge> edges;
  for (int a = 0; a < form.vertex_count; ++a) {
    for (int b = a + 1; b < form.vertex_count; ++b) {
      if ((form.rows[static_cast<std::size_t>(a)] >> b) & 1U) edges.emplace_back(a, b);
    }
  }
  return {form.vertex_count, std::move(edges)};
}

bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da;
  std::vector<int> db;
  for (Vertex v = 0; v < a.vertex_count(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace spokecycles
