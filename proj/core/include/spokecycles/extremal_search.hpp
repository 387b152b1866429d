#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spokecycles/cycle_engine.hpp"
#include "spokecycles/graph.hpp"

namespace spokecycles {

enum class Objective { min, max };

std::string_view to_string(Objective objective);
/// "min" or "max"; throws std::invalid_argument.
Objective parse_objective(std::string_view text);

struct ClassScan {
  /// Spoke matchings with no cycle-adjacent pair.
  std::uint64_t matchings_scanned = 0;
  /// Of those, rejected by the 3-connectivity test.
  std::uint64_t filtered_not_3conn = 0;
};

/// Default upper limit on V for exhaustive scans.
inline constexpr int kDefaultSearchCap = 18;

/// Streams every 3-connected chorded cycle on V vertices (one per labeled
/// spoke matching, so each abstract graph appears many times). Requires
/// V even with 6 <= V <= max_vertices; throws CapExceeded above the cap.
ClassScan for_each_class_member(int vertex_count,
                                const std::function<void(const ChordedCycleGraph&)>& visit,
                                int max_vertices = kDefaultSearchCap);

/// Collected form of for_each_class_member, for small V.
std::vector<ChordedCycleGraph> enumerate_class(int vertex_count,
                                               int max_vertices = kDefaultSearchCap);

enum class OracleCheck {
  none,
  /// Recount each class representative with the brute-force oracle.
  witnesses,
  /// Recount every scanned member with the oracle as well.
  full,
};

struct SearchOptions {
  unsigned jobs = 1;
  int max_vertices = kDefaultSearchCap;
  OracleCheck oracle_check = OracleCheck::witnesses;
  /// For min searches, abandon a count once it exceeds the best value so far
  /// (seeded with the H_V count). Never changes the result.
  bool prune = true;
};

struct SearchReport {
  int vertex_count = 0;
  Objective objective = Objective::min;
  CycleCount extremal_value = 0;
  /// One graph6 string per isomorphism class, sorted. Each is the smallest
  /// graph6 string among that class's labeled witnesses, so the hamiltonian
  /// cycle 0-1-...-(V-1) is visible in it.
  std::vector<std::string> extremal_classes;
  /// Labeled matchings attaining extremal_value.
  std::uint64_t witness_count = 0;
  /// Witnesses up to rotation and reflection of the cycle labels: distinct
  /// drawings of an extremal graph as a hamiltonian cycle with chords. One
  /// abstract graph contributes one diagram per essentially different
  /// hamiltonian cycle.
  std::uint64_t extremal_diagrams = 0;
  std::uint64_t matchings_scanned = 0;
  std::uint64_t filtered_not_3conn = 0;
  /// H_V is one of the extremal classes.
  bool contains_h2n = false;
  /// Cycle count of H_V from the closed form.
  CycleCount h2n_count = 0;
  /// ceil((V^2 + 14V) / 8).
  CycleCount two_connected_bound = 0;
  OracleCheck oracle_check = OracleCheck::none;
  /// Oracle extremum over all members (full check only).
  std::optional<CycleCount> oracle_extremal_value;
  /// Every representative recounted by the oracle matched (when checked).
  bool oracle_agrees = true;
  std::chrono::milliseconds elapsed{0};
};

SearchReport find_extremal(int vertex_count, Objective objective,
                           const SearchOptions& options = {});

/// Smallest image of a spoke matching under the 2V rotations and reflections
/// of the cycle labels.
std::vector<Vertex> dihedral_canonical(std::span<const Vertex> partner);

/// Minimum equals the H_V count and H_V is extremal.
bool conjecture_holds(const SearchReport& report);
bool verify_conjecture(int vertex_count, const SearchOptions& options = {});

}  // namespace spokecycles
