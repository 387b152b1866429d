#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "spokecycles/graph.hpp"

namespace spokecycles {

using CycleCount = std::uint64_t;
using BigInt = boost::multiprecision::cpp_int;

/// Subset of spoke indices 0..63.
class SpokeSubset {
 public:
  static constexpr std::size_t kMaxSpokes = 64;

  constexpr SpokeSubset() = default;
  constexpr explicit SpokeSubset(std::uint64_t bits) : bits_(bits) {}
  static SpokeSubset of(std::initializer_list<std::size_t> indices);
  /// {first, ..., last}
  static SpokeSubset interval(std::size_t first, std::size_t last);

  [[nodiscard]] constexpr std::uint64_t bits() const { return bits_; }
  [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
  [[nodiscard]] constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  [[nodiscard]] constexpr bool contains(std::size_t i) const {
    return i < kMaxSpokes && ((bits_ >> i) & 1U) != 0;
  }
  [[nodiscard]] std::vector<std::size_t> indices() const;
  SpokeSubset& insert(std::size_t i);
  SpokeSubset& erase(std::size_t i);

  friend constexpr bool operator==(SpokeSubset, SpokeSubset) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Closed index interval [first, last].
struct SpokeInterval {
  std::size_t first = 0;
  std::size_t last = 0;

  [[nodiscard]] std::size_t size() const { return last - first + 1; }
  friend bool operator==(const SpokeInterval&, const SpokeInterval&) = default;
};

/// Minimal partition of a spoke subset into maximal runs of consecutive
/// indices, ordered by smallest index.
struct BirPartition {
  std::vector<SpokeInterval> parts;

  [[nodiscard]] std::size_t part_count() const { return parts.size(); }
  [[nodiscard]] const SpokeInterval& last_part() const { return parts.back(); }
};

struct CountLedger {
  int n = 0;
  CycleCount c = 0;
  CycleCount alpha = 0;
  CycleCount alpha_even = 0;
  CycleCount alpha_odd = 0;
};

struct CountOptions {
  /// Refuse graphs with more spokes than this.
  std::size_t max_spokes = 31;
  /// Worker threads; 0 = hardware concurrency.
  unsigned jobs = 1;
};

/// The (at most two) cycles whose spoke set is exactly F. Sorting the 2k
/// endpoints i1 < ... < i2k, the candidates are F plus the forward arcs
/// i1->i2, i3->i4, ... (first) and F plus i2->i3, ..., i2k->i1 (second); each
/// candidate is returned only if it is a single cycle. Throws GraphError on an
/// empty F or an index out of range.
std::vector<CycleEdgeSet> cycles_from_subset(const ChordedCycleGraph& g, SpokeSubset f);

/// |cycles_from_subset(g, f)| without materialising edge sets.
int formed_cycle_count(const ChordedCycleGraph& g, SpokeSubset f);

/// All cycles of g: 1 (the hamiltonian cycle) plus the formed cycles of every
/// non-empty spoke subset. Throws CapExceeded beyond options.max_spokes.
CycleCount count_cycles(const ChordedCycleGraph& g, const CountOptions& options = {});

/// Cycles whose edge set contains e, including the hamiltonian cycle when e
/// is a cycle edge. Throws GraphError if e is not an edge of g.
CycleCount count_cycles_through_edge(const ChordedCycleGraph& g, const Edge& e,
                                     const CountOptions& options = {});

/// Throws GraphError for an empty subset.
BirPartition bir(SpokeSubset f);

/// Cycle count of H_2n from interval structure alone: a single run gives two
/// cycles, several runs give one cycle iff every interior run has even size.
CycleCount count_cycles_bir(int n);

/// Cycles of H_2n through alpha, split by parity of the last run of their
/// spoke set (the hamiltonian cycle, with no spokes, counts as even). Counted
/// directly from constructed cycles.
std::pair<CycleCount, CycleCount> alpha_even_odd(int n);

/// c, alpha, E and O of H_2n, each counted directly.
CountLedger count_ledger(int n);

/// F(0) = 0, F(1) = 1.
BigInt fibonacci(int k);

/// alpha_n = F(n+3) - 1. Throws std::invalid_argument for n < 2.
BigInt closed_form_alpha(int n);

/// c_n = alpha_{n+2} - (n+3) = F(n+5) - (n+4). Throws for n < 2.
///
/// The golden-ratio expression (1 + 2/sqrt5) phi^m + (1 - 2/sqrt5) psi^m with
/// m = n+2 equals L(m) + 2F(m) = F(m+3), so it agrees with this form; the
/// constant subtracted is n+4.
BigInt closed_form_c(int n);

namespace detail {

/// Cycle count of a chorded cycle given by its partner array (V <= 62),
/// stopping early once the running total exceeds `limit`. The return value is
/// exact whenever it is <= limit.
CycleCount count_cycles_bounded(std::span<const Vertex> partner, CycleCount limit);

/// Partial sum over the Gray-code subset range [begin, end) of 1..2^s-1.
CycleCount count_subset_range(std::span<const Vertex> partner, std::uint64_t begin,
                              std::uint64_t end);

}  // namespace detail

}  // namespace spokecycles
