#include "spokecycles/cycle_engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "spokecycles/h2n.hpp"
#include "spokecycles/parallel.hpp"

namespace spokecycles {

SpokeSubset SpokeSubset::of(std::initializer_list<std::size_t> indices) {
  SpokeSubset s;
  for (std::size_t i : indices) s.insert(i);
  return s;
}

SpokeSubset SpokeSubset::interval(std::size_t first, std::size_t last) {
  SpokeSubset s;
  for (std::size_t i = first; i <= last; ++i) s.insert(i);
  return s;
}

std::vector<std::size_t> SpokeSubset::indices() const {
  std::vector<std::size_t> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  }
  return out;
}

SpokeSubset& SpokeSubset::insert(std::size_t i) {
  if (i >= kMaxSpokes) throw std::out_of_range("spoke index " + std::to_string(i));
  bits_ |= std::uint64_t{1} << i;
  return *this;
}

SpokeSubset& SpokeSubset::erase(std::size_t i) {
  if (i < kMaxSpokes) bits_ &= ~(std::uint64_t{1} << i);
  return *this;
}

namespace {

constexpr int kMaxKernelVertices = 62;

using Mask = std::uint64_t;

Mask below(Vertex w) { return (Mask{1} << w) - 1; }
Mask at_or_below(Vertex w) { return (Mask{2} << w) - 1; }
int highest(Mask m) { return 63 - std::countl_zero(m); }
int lowest(Mask m) { return std::countr_zero(m); }

// Walks the alternating spoke/arc structure of one candidate edge set from
// the lowest endpoint. `odd_arcs` selects the second candidate (arcs leave
// odd ranks, with the wrap-around arc). A single cycle uses all k spokes.
bool walk_is_cycle(Mask m, std::span<const Vertex> partner, bool odd_arcs) {
  const int spokes = std::popcount(m) / 2;
  const Vertex start = lowest(m);
  Vertex v = start;
  int steps = 0;
  do {
    const Vertex w = partner[static_cast<std::size_t>(v)];
    const Mask lower = m & below(w);
    const bool rank_odd = (std::popcount(lower) & 1) != 0;
    if (rank_odd == odd_arcs) {
      const Mask upper = m & ~at_or_below(w);
      v = upper != 0 ? lowest(upper) : start;
    } else {
      v = lower != 0 ? highest(lower) : highest(m);
    }
    ++steps;
  } while (v != start && steps <= spokes);
  return steps == spokes && v == start;
}

struct Formed {
  bool first = false;
  bool second = false;
};

Formed formed_from_mask(Mask m, std::span<const Vertex> partner) {
  return {walk_is_cycle(m, partner, false), walk_is_cycle(m, partner, true)};
}

// Endpoint masks of spokes in order of smaller endpoint.
std::vector<Mask> endpoint_masks(std::span<const Vertex> partner) {
  std::vector<Mask> masks;
  for (std::size_t v = 0; v < partner.size(); ++v) {
    const auto w = static_cast<std::size_t>(partner[v]);
    if (v < w) masks.push_back((Mask{1} << v) | (Mask{1} << w));
  }
  return masks;
}

// Vertex mask of the spoke subset given by `subset` over `masks`.
Mask vertex_mask(const std::vector<Mask>& masks, std::uint64_t subset) {
  Mask m = 0;
  for (std::uint64_t b = subset; b != 0; b &= b - 1) {
    m |= masks[static_cast<std::size_t>(std::countr_zero(b))];
  }
  return m;
}

Mask vertex_mask(const ChordedCycleGraph& g, SpokeSubset f) {
  Mask m = 0;
  for (std::size_t i : f.indices()) {
    const Edge& e = g.spoke(i);
    m |= (Mask{1} << e.u) | (Mask{1} << e.v);
  }
  return m;
}

void check_subset(const ChordedCycleGraph& g, SpokeSubset f) {
  if (f.empty()) throw GraphError("spoke subset must be non-empty");
  if (f.bits() >> g.spoke_count() != 0 && g.spoke_count() < 64) {
    throw GraphError("spoke subset refers to a spoke index beyond " +
                     std::to_string(g.spoke_count() - 1));
  }
}

void check_kernel_size(int vertex_count) {
  if (vertex_count > kMaxKernelVertices) {
    throw CapExceeded("cycle counting supports at most 62 vertices");
  }
}

std::vector<Edge> forward_arc(const ChordedCycleGraph& g, Vertex from, Vertex to) {
  std::vector<Edge> edges;
  for (Vertex x = from; x != to; x = g.next(x)) edges.emplace_back(x, g.next(x));
  return edges;
}

}  // namespace

std::vector<CycleEdgeSet> cycles_from_subset(const ChordedCycleGraph& g, SpokeSubset f) {
  check_subset(g, f);
  std::vector<Vertex> ends;
  for (std::size_t i : f.indices()) {
    ends.push_back(g.spoke(i).u);
    ends.push_back(g.spoke(i).v);
  }
  std::sort(ends.begin(), ends.end());
  const std::size_t count = ends.size();

  std::vector<CycleEdgeSet> cycles;
  for (std::size_t offset : {std::size_t{0}, std::size_t{1}}) {
    std::vector<Edge> edges;
    for (std::size_t i : f.indices()) edges.push_back(g.spoke(i));
    for (std::size_t j = offset; j < count; j += 2) {
      const auto arc = forward_arc(g, ends[j], ends[(j + 1) % count]);
      edges.insert(edges.end(), arc.begin(), arc.end());
    }
    if (auto cycle = CycleEdgeSet::from_edges(std::move(edges))) {
      cycles.push_back(std::move(*cycle));
    }
  }
  return cycles;
}

int formed_cycle_count(const ChordedCycleGraph& g, SpokeSubset f) {
  check_subset(g, f);
  if (g.vertex_count() > kMaxKernelVertices) {
    return static_cast<int>(cycles_from_subset(g, f).size());
  }
  const Formed formed = formed_from_mask(vertex_mask(g, f), g.partners());
  return static_cast<int>(formed.first) + static_cast<int>(formed.second);
}

namespace detail {

CycleCount count_subset_range(std::span<const Vertex> partner, std::uint64_t begin,
                              std::uint64_t end) {
  const std::vector<Mask> masks = endpoint_masks(partner);
  CycleCount total = 0;
  if (begin >= end) return total;
  std::uint64_t gray = begin ^ (begin >> 1);
  Mask m = vertex_mask(masks, gray);
  for (std::uint64_t i = begin;;) {
    if (m != 0) {
      const Formed formed = formed_from_mask(m, partner);
      total += static_cast<CycleCount>(formed.first) + static_cast<CycleCount>(formed.second);
    }
    if (++i == end) break;
    const auto flip = static_cast<std::size_t>(std::countr_zero(i));
    gray ^= std::uint64_t{1} << flip;
    m ^= masks[flip];
  }
  return total;
}

CycleCount count_cycles_bounded(std::span<const Vertex> partner, CycleCount limit) {
  check_kernel_size(static_cast<int>(partner.size()));
  const std::vector<Mask> masks = endpoint_masks(partner);
  const std::uint64_t end = std::uint64_t{1} << masks.size();
  CycleCount total = 1;
  std::uint64_t gray = 0;
  Mask m = 0;
  for (std::uint64_t i = 1; i < end; ++i) {
    const auto flip = static_cast<std::size_t>(std::countr_zero(i));
    gray ^= std::uint64_t{1} << flip;
    m ^= masks[flip];
    const Formed formed = formed_from_mask(m, partner);
    total += static_cast<CycleCount>(formed.first) + static_cast<CycleCount>(formed.second);
    if (total > limit) return total;
  }
  return total;
}

}  // namespace detail

CycleCount count_cycles(const ChordedCycleGraph& g, const CountOptions& options) {
  if (g.spoke_count() > options.max_spokes) {
    throw CapExceeded("graph has " + std::to_string(g.spoke_count()) +
                      " spokes, cap is " + std::to_string(options.max_spokes));
  }
  check_kernel_size(g.vertex_count());
  const std::uint64_t end = std::uint64_t{1} << g.spoke_count();
  // Fixed chunking keeps the sum identical for any worker count.
  constexpr std::uint64_t kChunk = std::uint64_t{1} << 14;
  const std::size_t chunks = static_cast<std::size_t>((end + kChunk - 1) / kChunk);
  std::vector<CycleCount> partial(chunks, 0);
  run_tasks(chunks, options.jobs, [&](std::size_t c) {
    const std::uint64_t lo = std::max<std::uint64_t>(1, c * kChunk);
    const std::uint64_t hi = std::min<std::uint64_t>(end, (c + 1) * kChunk);
    partial[c] = detail::count_subset_range(g.partners(), lo, hi);
  });
  CycleCount total = 1;
  for (CycleCount p : partial) total += p;
  return total;
}

CycleCount count_cycles_through_edge(const ChordedCycleGraph& g, const Edge& e,
                                     const CountOptions& options) {
  if (!g.has_edge(e)) throw GraphError("edge " + to_string(e) + " is not in the graph");
  if (g.spoke_count() > options.max_spokes) {
    throw CapExceeded("graph has " + std::to_string(g.spoke_count()) +
                      " spokes, cap is " + std::to_string(options.max_spokes));
  }
  check_kernel_size(g.vertex_count());
  const auto spoke = g.spoke_index(e);
  // The arc leaving x covers the cycle edge x -> x+1.
  const Vertex tail = (e.u == 0 && e.v == g.vertex_count() - 1) ? e.v : e.u;
  CycleCount total = spoke ? 0 : 1;
  const std::uint64_t end = std::uint64_t{1} << g.spoke_count();
  for (std::uint64_t bits = 1; bits < end; ++bits) {
    const SpokeSubset f(bits);
    if (spoke && !f.contains(*spoke)) continue;
    const Mask m = vertex_mask(g, f);
    const Formed formed = formed_from_mask(m, g.partners());
    if (spoke) {
      total += static_cast<CycleCount>(formed.first) + static_cast<CycleCount>(formed.second);
      continue;
    }
    const Mask upto = m & at_or_below(tail);
    const int rank = upto != 0 ? std::popcount(upto) - 1 : std::popcount(m) - 1;
    const bool in_second = (rank & 1) != 0;
    total += static_cast<CycleCount>(in_second ? formed.second : formed.first);
  }
  return total;
}

BirPartition bir(SpokeSubset f) {
  if (f.empty()) throw GraphError("BIR of an empty spoke set");
  BirPartition out;
  for (std::size_t i : f.indices()) {
    if (!out.parts.empty() && out.parts.back().last + 1 == i) {
      out.parts.back().last = i;
    } else {
      out.parts.push_back({i, i});
    }
  }
  return out;
}

CycleCount count_cycles_bir(int n) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (n > 40) throw CapExceeded("BIR counting supports n <= 40");
  CycleCount total = 1;
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t bits = 1; bits < end; ++bits) {
    const BirPartition p = bir(SpokeSubset(bits));
    if (p.part_count() == 1) {
      total += 2;
      continue;
    }
    bool interior_even = true;
    for (std::size_t i = 1; i + 1 < p.part_count() && interior_even; ++i) {
      interior_even = p.parts[i].size() % 2 == 0;
    }
    if (interior_even) total += 1;
  }
  return total;
}

std::pair<CycleCount, CycleCount> alpha_even_odd(int n) {
  const H2nGraph h = construct_h2n(n);
  const ChordedCycleGraph& g = h.graph;
  if (g.spoke_count() > 31) throw CapExceeded("alpha classification supports n <= 31");
  CycleCount even = 1;  // the hamiltonian cycle
  CycleCount odd = 0;
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t bits = 1; bits < end; ++bits) {
    const SpokeSubset f(bits);
    const bool last_even = bir(f).last_part().size() % 2 == 0;
    for (const CycleEdgeSet& c : cycles_from_subset(g, f)) {
      if (!c.contains(h.alpha)) continue;
      (last_even ? even : odd) += 1;
    }
  }
  return {even, odd};
}

CountLedger count_ledger(int n) {
  const H2nGraph h = construct_h2n(n);
  CountLedger ledger;
  ledger.n = n;
  ledger.c = count_cycles(h.graph);
  ledger.alpha = count_cycles_through_edge(h.graph, h.alpha);
  std::tie(ledger.alpha_even, ledger.alpha_odd) = alpha_even_odd(n);
  return ledger;
}

BigInt fibonacci(int k) {
  if (k < 0) throw std::invalid_argument("negative Fibonacci index");
  BigInt a = 0;
  BigInt b = 1;
  for (int i = 0; i < k; ++i) {
    BigInt next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

BigInt closed_form_alpha(int n) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  return fibonacci(n + 3) - 1;
}

BigInt closed_form_c(int n) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  return fibonacci(n + 5) - (n + 4);
}

}  // namespace spokecycles
