#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "spokecycles/cycle_engine.hpp"
#include "spokecycles/graph.hpp"

namespace spokecycles {

enum class SpokeRelation { intersecting, parallel };

/// Whether the endpoints of spokes e and f interleave around the cycle.
/// Throws GraphError when e == f or an index is out of range.
bool spokes_intersect(const ChordedCycleGraph& g, std::size_t e, std::size_t f);
/// Edge form; throws GraphError if either edge is not a spoke of g.
bool spokes_intersect(const ChordedCycleGraph& g, const Edge& e, const Edge& f);
SpokeRelation spoke_relation(const ChordedCycleGraph& g, std::size_t e, std::size_t f);

/// Spokes of F other than e and f that intersect both.
std::size_t common_intersectors(const ChordedCycleGraph& g, SpokeSubset f_set, std::size_t e,
                                std::size_t f);

/// Two readings of "e and f are consecutive in F".
///  - by_definition: every other spoke of F intersects both or neither.
///  - by_arcs: with the four endpoints p0 < p1 < p2 < p3, either the open arcs
///    (p0,p1) and (p2,p3) or the open arcs (p1,p2) and (p3,p0) carry no
///    endpoint of a spoke in F.
/// The arc reading implies the definition; the converse fails once F has two
/// or more further spokes (e.g. one nested under each of two arcs).
struct Consecutiveness {
  bool by_definition = false;
  bool by_arcs = false;

  [[nodiscard]] bool holds() const { return by_definition && by_arcs; }
};

/// Throws GraphError unless e, f are distinct members of F.
Consecutiveness consecutiveness(const ChordedCycleGraph& g, SpokeSubset f_set, std::size_t e,
                                std::size_t f);

/// Both readings hold.
bool consecutive_in_set(const ChordedCycleGraph& g, SpokeSubset f_set, std::size_t e,
                        std::size_t f);

enum class ClaimStatus { holds, violated, inapplicable };

std::string_view to_string(ClaimStatus status);

struct ClaimVerdict {
  ClaimStatus status = ClaimStatus::inapplicable;
  /// Formed cycles of F; -1 when inapplicable.
  int cycles = -1;
  /// Spoke indices that satisfied the hypotheses.
  std::vector<std::size_t> witness;
  /// A crossing pair with |F| = 2 met the other hypotheses.
  bool crossing_base_case = false;
  std::string note;
};

/// "F has consecutive spokes e, f with an even number of spokes of F
/// crossing both, hence F forms at most one cycle." Hypotheses: consecutive in
/// both readings and an even common-intersector count. With |F| = 2 the pair
/// must also be parallel: two crossing spokes alone always form two cycles
/// (K4), so that case is reported inapplicable with a note.
ClaimVerdict check_consecutive_pair_claim(const ChordedCycleGraph& g, SpokeSubset f_set);

/// "|F| > 1 and some e in F is crossed by no spoke of F, hence F forms at
/// most one cycle."
ClaimVerdict check_free_spoke_claim(const ChordedCycleGraph& g, SpokeSubset f_set);

bool has_unintersected_spoke(const ChordedCycleGraph& g, SpokeSubset f_set);
bool has_consecutive_pair(const ChordedCycleGraph& g, SpokeSubset f_set);

enum class SparseCase { unintersected_spoke, consecutive_pair };

struct SparseSpokeSet {
  SpokeSubset spokes;
  SparseCase kind = SparseCase::unintersected_spoke;
  /// One spoke for unintersected_spoke, two for consecutive_pair.
  std::vector<std::size_t> witness;
  /// k = floor(sqrt(V)).
  int block_size = 0;
  /// Half-open vertex ranges [first, second) of the k blocks.
  std::vector<std::pair<Vertex, Vertex>> blocks;
  std::size_t removed = 0;
};

/// Splits 0..V-1 into k = floor(sqrt V) runs of consecutive vertices, sizes in
/// [k, k+2], as equal as possible from vertex 0. If some spoke has both ends
/// in one block, drops every spoke touching the interior of the path between
/// them (first such spoke wins). Otherwise two spokes leaving the first block
/// land in a common block (pigeonhole), and the spokes touching the interiors
/// of the two short paths they span are dropped. The result has at least
/// V/2 - 2k spokes and contains an unintersected spoke or a consecutive pair.
SparseSpokeSet find_sparse_spoke_set(const ChordedCycleGraph& g);

/// Upper bound 2^(V/2+1) - 2^(V/2 - 2 sqrt V - 3) on the cycle count of a
/// hamiltonian cubic graph with V vertices.
struct CycleUpperBound {
  int vertex_count = 0;
  double value = 0.0;
  /// Largest integer strictly below the bound.
  CycleCount max_below = 0;

  [[nodiscard]] bool admits(CycleCount count) const { return count <= max_below; }
};

/// V even, 4 <= V <= 120. Exact in the integer companion.
CycleUpperBound max_cycles_upper_bound(int vertex_count);

/// Random chorded cycle on V vertices that passes the 3-connectivity test.
ChordedCycleGraph random_class_member(int vertex_count, std::mt19937_64& rng);

struct ClaimTally {
  std::size_t applicable = 0;
  std::size_t holds = 0;
  std::size_t violated = 0;
  std::size_t inapplicable = 0;
};

struct ClaimSweepConfig {
  std::vector<int> vertex_counts;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
};

struct ClaimSweepReport {
  ClaimSweepConfig config;
  ClaimTally consecutive_pair;
  ClaimTally free_spoke;
  /// Crossing pairs with |F| = 2 that meet the literal hypotheses.
  std::size_t crossing_base_cases = 0;
  std::size_t sparse_checked = 0;
  std::size_t sparse_failures = 0;
  /// Sample indices of violations, for replay.
  std::vector<std::size_t> violating_samples;

  [[nodiscard]] bool clean() const {
    return consecutive_pair.violated == 0 && free_spoke.violated == 0 && sparse_failures == 0;
  }
};

/// Draws `samples` (graph, subset) pairs. Sample i uses V =
/// vertex_counts[i % size] and its own generator seeded from (seed, i), so the
/// report does not depend on the worker count.
ClaimSweepReport sweep_claims(const ClaimSweepConfig& config);

}  // namespace spokecycles
