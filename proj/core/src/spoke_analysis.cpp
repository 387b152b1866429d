#include "spokecycles/spoke_analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>

#include "spokecycles/connectivity.hpp"
#include "spokecycles/parallel.hpp"

namespace spokecycles {

namespace {

void check_spoke(const ChordedCycleGraph& g, std::size_t i) {
  if (i >= g.spoke_count()) throw GraphError("spoke index " + std::to_string(i) + " out of range");
}

void check_member(const ChordedCycleGraph& g, SpokeSubset f_set, std::size_t i) {
  check_spoke(g, i);
  if (!f_set.contains(i)) {
    throw GraphError("spoke " + std::to_string(i) + " is not in the spoke set");
  }
}

bool strictly_inside(Vertex x, Vertex lo, Vertex hi) { return lo < x && x < hi; }

// Marks every vertex incident with a spoke of F.
std::vector<char> touched_vertices(const ChordedCycleGraph& g, SpokeSubset f_set) {
  std::vector<char> touched(static_cast<std::size_t>(g.vertex_count()), 0);
  for (std::size_t i : f_set.indices()) {
    touched[static_cast<std::size_t>(g.spoke(i).u)] = 1;
    touched[static_cast<std::size_t>(g.spoke(i).v)] = 1;
  }
  return touched;
}

// Open arc from a forward to b.
bool arc_touched(const ChordedCycleGraph& g, const std::vector<char>& touched, Vertex a,
                 Vertex b) {
  for (Vertex x = g.next(a); x != b; x = g.next(x)) {
    if (touched[static_cast<std::size_t>(x)]) return true;
  }
  return false;
}

std::uint64_t sample_seed_word(std::uint64_t seed, std::size_t index) {
  // splitmix64 of (seed, index)
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(index) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

bool spokes_intersect(const ChordedCycleGraph& g, std::size_t e, std::size_t f) {
  check_spoke(g, e);
  check_spoke(g, f);
  if (e == f) throw GraphError("a spoke is compared with itself");
  const Edge& a = g.spoke(e);
  const Edge& b = g.spoke(f);
  return strictly_inside(b.u, a.u, a.v) != strictly_inside(b.v, a.u, a.v);
}

bool spokes_intersect(const ChordedCycleGraph& g, const Edge& e, const Edge& f) {
  const auto i = g.spoke_index(e);
  const auto j = g.spoke_index(f);
  if (!i || !j) throw GraphError("edge is not a spoke of the graph");
  return spokes_intersect(g, *i, *j);
}

SpokeRelation spoke_relation(const ChordedCycleGraph& g, std::size_t e, std::size_t f) {
  return spokes_intersect(g, e, f) ? SpokeRelation::intersecting : SpokeRelation::parallel;
}

std::size_t common_intersectors(const ChordedCycleGraph& g, SpokeSubset f_set, std::size_t e,
                                std::size_t f) {
  std::size_t count = 0;
  for (std::size_t x : f_set.indices()) {
    if (x == e || x == f) continue;
    if (spokes_intersect(g, x, e) && spokes_intersect(g, x, f)) ++count;
  }
  return count;
}

Consecutiveness consecutiveness(const ChordedCycleGraph& g, SpokeSubset f_set, std::size_t e,
                                std::size_t f) {
  check_member(g, f_set, e);
  check_member(g, f_set, f);
  if (e == f) throw GraphError("consecutiveness needs two distinct spokes");

  Consecutiveness out;
  out.by_definition = true;
  for (std::size_t x : f_set.indices()) {
    if (x == e || x == f) continue;
    if (spokes_intersect(g, x, e) != spokes_intersect(g, x, f)) {
      out.by_definition = false;
      break;
    }
  }

  std::array<Vertex, 4> p{g.spoke(e).u, g.spoke(e).v, g.spoke(f).u, g.spoke(f).v};
  std::sort(p.begin(), p.end());
  const auto touched = touched_vertices(g, f_set);
  const bool a1 = arc_touched(g, touched, p[0], p[1]);
  const bool a2 = arc_touched(g, touched, p[1], p[2]);
  const bool a3 = arc_touched(g, touched, p[2], p[3]);
  const bool a4 = arc_touched(g, touched, p[3], p[0]);
  out.by_arcs = (!a1 && !a3) || (!a2 && !a4);
  return out;
}

bool consecutive_in_set(const ChordedCycleGraph& g, SpokeSubset f_set, std::size_t e,
                        std::size_t f) {
  return consecutiveness(g, f_set, e, f).holds();
}

std::string_view to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::holds:
      return "holds";
    case ClaimStatus::violated:
      return "violated";
    case ClaimStatus::inapplicable:
      return "inapplicable";
  }
  return "?";
}

ClaimVerdict check_consecutive_pair_claim(const ChordedCycleGraph& g, SpokeSubset f_set) {
  ClaimVerdict verdict;
  const auto members = f_set.indices();
  if (members.size() < 2) {
    verdict.note = "needs at least two spokes";
    return verdict;
  }
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      const std::size_t e = members[a];
      const std::size_t f = members[b];
      if (!consecutive_in_set(g, f_set, e, f)) continue;
      if (common_intersectors(g, f_set, e, f) % 2 != 0) continue;
      if (members.size() == 2 && spokes_intersect(g, e, f)) {
        verdict.crossing_base_case = true;
        verdict.note = "two crossing spokes: the two-spoke case needs a parallel pair";
        continue;
      }
      verdict.witness = {e, f};
      verdict.cycles = formed_cycle_count(g, f_set);
      verdict.status = verdict.cycles <= 1 ? ClaimStatus::holds : ClaimStatus::violated;
      return verdict;
    }
  }
  if (verdict.note.empty()) verdict.note = "no consecutive pair with an even crossing count";
  return verdict;
}

ClaimVerdict check_free_spoke_claim(const ChordedCycleGraph& g, SpokeSubset f_set) {
  ClaimVerdict verdict;
  const auto members = f_set.indices();
  if (members.size() < 2) {
    verdict.note = "needs at least two spokes";
    return verdict;
  }
  for (std::size_t e : members) {
    const bool crossed = std::any_of(members.begin(), members.end(), [&](std::size_t x) {
      return x != e && spokes_intersect(g, x, e);
    });
    if (crossed) continue;
    verdict.witness = {e};
    verdict.cycles = formed_cycle_count(g, f_set);
    verdict.status = verdict.cycles <= 1 ? ClaimStatus::holds : ClaimStatus::violated;
    return verdict;
  }
  verdict.note = "every spoke is crossed";
  return verdict;
}

bool has_unintersected_spoke(const ChordedCycleGraph& g, SpokeSubset f_set) {
  const auto members = f_set.indices();
  return std::any_of(members.begin(), members.end(), [&](std::size_t e) {
    return std::none_of(members.begin(), members.end(), [&](std::size_t x) {
      return x != e && spokes_intersect(g, x, e);
    });
  });
}

bool has_consecutive_pair(const ChordedCycleGraph& g, SpokeSubset f_set) {
  const auto members = f_set.indices();
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      if (consecutive_in_set(g, f_set, members[a], members[b])) return true;
    }
  }
  return false;
}

SparseSpokeSet find_sparse_spoke_set(const ChordedCycleGraph& g) {
  const int n = g.vertex_count();
  if (g.spoke_count() > SpokeSubset::kMaxSpokes) {
    throw CapExceeded("sparse spoke sets support at most 64 spokes");
  }
  int root = static_cast<int>(std::sqrt(static_cast<double>(n)));
  while (root * root > n) --root;
  while ((root + 1) * (root + 1) <= n) ++root;

  SparseSpokeSet out;
  out.block_size = root;
  const int base = n / root;
  const int extra = n % root;
  if (base < root || base + (extra > 0 ? 1 : 0) > root + 2) {
    throw GraphError("no block partition with sizes in [k, k+2]");
  }
  std::vector<int> block_of(static_cast<std::size_t>(n));
  for (int b = 0, start = 0; b < root; ++b) {
    const int size = base + (b < extra ? 1 : 0);
    out.blocks.emplace_back(start, start + size);
    for (int x = start; x < start + size; ++x) block_of[static_cast<std::size_t>(x)] = b;
    start += size;
  }

  SpokeSubset all;
  for (std::size_t i = 0; i < g.spoke_count(); ++i) all.insert(i);
  auto drop_interior = [&](SpokeSubset& set, Vertex lo, Vertex hi) {
    for (Vertex x = lo + 1; x < hi; ++x) set.erase(g.spoke_at(x));
  };

  for (std::size_t i = 0; i < g.spoke_count(); ++i) {
    const Edge& e = g.spoke(i);
    if (block_of[static_cast<std::size_t>(e.u)] != block_of[static_cast<std::size_t>(e.v)]) {
      continue;
    }
    out.kind = SparseCase::unintersected_spoke;
    out.witness = {i};
    out.spokes = all;
    drop_interior(out.spokes, e.u, e.v);
    out.removed = all.size() - out.spokes.size();
    return out;
  }

  // Every spoke leaving block 0 lands in one of the other k-1 blocks.
  std::vector<std::vector<Vertex>> landing(static_cast<std::size_t>(root));
  for (Vertex x = out.blocks[0].first; x < out.blocks[0].second; ++x) {
    const Vertex y = g.partner(x);
    auto& list = landing[static_cast<std::size_t>(block_of[static_cast<std::size_t>(y)])];
    list.push_back(x);
    if (list.size() < 2) continue;
    const Vertex i = list[0];
    const Vertex j = list[1];
    const Vertex a = std::min(g.partner(i), g.partner(j));
    const Vertex b = std::max(g.partner(i), g.partner(j));
    out.kind = SparseCase::consecutive_pair;
    out.witness = {g.spoke_at(i), g.spoke_at(j)};
    out.spokes = all;
    drop_interior(out.spokes, i, j);
    drop_interior(out.spokes, a, b);
    out.removed = all.size() - out.spokes.size();
    return out;
  }
  throw std::logic_error("pigeonhole failed: block 0 is smaller than the block count");
}

CycleUpperBound max_cycles_upper_bound(int vertex_count) {
  if (vertex_count < 4 || vertex_count % 2 != 0 || vertex_count > 120) {
    throw std::invalid_argument("bound needs even V in [4, 120]");
  }
  const int half = vertex_count / 2;
  const CycleCount leading = CycleCount{1} << (half + 1);
  const long double root = std::sqrt(static_cast<long double>(vertex_count));
  const long double exponent = static_cast<long double>(half) - 2.0L * root - 3.0L;

  CycleUpperBound out;
  out.vertex_count = vertex_count;
  out.value = static_cast<double>(static_cast<long double>(leading) - std::exp2(exponent));

  int int_root = static_cast<int>(std::lround(root));
  const bool square = int_root * int_root == vertex_count;
  if (exponent < 0) {
    // 0 < 2^exponent < 1
    out.max_below = leading - 1;
  } else if (square) {
    const int e = half - 2 * int_root - 3;
    out.max_below = leading - (CycleCount{1} << e) - 1;
  } else {
    // 2^exponent is irrational here, so the bound is never an integer.
    out.max_below = static_cast<CycleCount>(
        std::floor(static_cast<long double>(leading) - std::exp2(exponent)));
  }
  return out;
}

ChordedCycleGraph random_class_member(int vertex_count, std::mt19937_64& rng) {
  for (;;) {
    ChordedCycleGraph g = random_chorded_graph(vertex_count, rng);
    if (is_three_connected(g)) return g;
  }
}

ClaimSweepReport sweep_claims(const ClaimSweepConfig& config) {
  if (config.vertex_counts.empty()) throw std::invalid_argument("no vertex counts to sweep");
  for (int v : config.vertex_counts) {
    if (v < 6 || v % 2 != 0 || v > 128) {
      throw std::invalid_argument("sweep vertex counts must be even in [6, 128]");
    }
  }

  struct Outcome {
    ClaimStatus pair = ClaimStatus::inapplicable;
    ClaimStatus free = ClaimStatus::inapplicable;
    bool crossing_base = false;
    bool sparse_ok = true;
  };
  std::vector<Outcome> outcomes(config.samples);
  run_tasks(config.samples, config.jobs, [&](std::size_t i) {
    std::mt19937_64 rng(sample_seed_word(config.seed, i));
    const int v = config.vertex_counts[i % config.vertex_counts.size()];
    const ChordedCycleGraph g = random_class_member(v, rng);
    const std::size_t s = g.spoke_count();

    // Subset size uniform in [2, s], members uniform among spokes.
    std::uniform_int_distribution<std::size_t> size_dist(2, s);
    const std::size_t size = size_dist(rng);
    std::vector<std::size_t> order(s);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    SpokeSubset f;
    for (std::size_t j = 0; j < size; ++j) f.insert(order[j]);

    Outcome& out = outcomes[i];
    const ClaimVerdict pair = check_consecutive_pair_claim(g, f);
    out.pair = pair.status;
    out.crossing_base = pair.crossing_base_case;
    out.free = check_free_spoke_claim(g, f).status;

    const SparseSpokeSet sparse = find_sparse_spoke_set(g);
    const auto lower = static_cast<long>(v / 2) - 2L * sparse.block_size;
    out.sparse_ok = static_cast<long>(sparse.spokes.size()) >= lower &&
                    (has_unintersected_spoke(g, sparse.spokes) ||
                     has_consecutive_pair(g, sparse.spokes));
  });

  ClaimSweepReport report;
  report.config = config;
  auto tally = [](ClaimTally& t, ClaimStatus s) {
    switch (s) {
      case ClaimStatus::holds:
        ++t.applicable;
        ++t.holds;
        break;
      case ClaimStatus::violated:
        ++t.applicable;
        ++t.violated;
        break;
      case ClaimStatus::inapplicable:
        ++t.inapplicable;
        break;
    }
  };
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const Outcome& o = outcomes[i];
    tally(report.consecutive_pair, o.pair);
    tally(report.free_spoke, o.free);
    if (o.crossing_base) ++report.crossing_base_cases;
    ++report.sparse_checked;
    if (!o.sparse_ok) ++report.sparse_failures;
    if (o.pair == ClaimStatus::violated || o.free == ClaimStatus::violated || !o.sparse_ok) {
      report.violating_samples.push_back(i);
    }
  }
  return report;
}

}  // namespace spokecycles
