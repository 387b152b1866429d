#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "spokecycles/h2n.hpp"
#include "spokecycles/spoke_analysis.hpp"
#include "test_util.hpp"

namespace spokecycles {
namespace {

std::size_t idx(const ChordedCycleGraph& g, Vertex a, Vertex b) {
  return *g.spoke_index(Edge(a, b));
}

TEST(Intersect, BasicExamples) {
  const auto k4 = testing::k4();
  EXPECT_TRUE(spokes_intersect(k4, Edge(1, 3), Edge(0, 2)));
  const auto g8 = ChordedCycleGraph::build(8, {{0, 2}, {4, 6}, {1, 5}, {3, 7}});
  EXPECT_FALSE(spokes_intersect(g8, Edge(0, 2), Edge(4, 6)));
  EXPECT_EQ(spoke_relation(g8, idx(g8, 0, 2), idx(g8, 4, 6)), SpokeRelation::parallel);
  EXPECT_EQ(spoke_relation(g8, idx(g8, 0, 2), idx(g8, 1, 5)), SpokeRelation::intersecting);
  const H2nGraph h = construct_h2n(8);
  EXPECT_TRUE(spokes_intersect(h.graph, Edge(1, 15), Edge(0, 13)));
}

TEST(Intersect, Errors) {
  const auto g = testing::prism();
  EXPECT_THROW(spokes_intersect(g, 0, 0), GraphError);
  EXPECT_THROW(spokes_intersect(g, 0, 9), GraphError);
  EXPECT_THROW(spokes_intersect(g, Edge(0, 1), Edge(1, 4)), GraphError);
}

TEST(Intersect, SymmetricAndMatchesInterleaving) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 50; ++t) {
    const auto g = random_chorded_graph(14, rng);
    for (std::size_t e = 0; e < g.spoke_count(); ++e) {
      for (std::size_t f = e + 1; f < g.spoke_count(); ++f) {
        const Edge a = g.spoke(e);
        const Edge b = g.spoke(f);
        const bool inside_u = a.u < b.u && b.u < a.v;
        const bool inside_v = a.u < b.v && b.v < a.v;
        EXPECT_EQ(spokes_intersect(g, e, f), inside_u != inside_v);
        EXPECT_EQ(spokes_intersect(g, e, f), spokes_intersect(g, f, e));
      }
    }
  }
}

TEST(Consecutive, PairAloneIsConsecutive) {
  const auto g = testing::k4();
  const Consecutiveness c = consecutiveness(g, SpokeSubset::of({0, 1}), 0, 1);
  EXPECT_TRUE(c.by_definition);
  EXPECT_TRUE(c.by_arcs);
  EXPECT_TRUE(consecutive_in_set(g, SpokeSubset::of({0, 1}), 0, 1));
  EXPECT_THROW(consecutiveness(g, SpokeSubset::of({0}), 0, 1), GraphError);
}

TEST(Consecutive, SpokeCrossingOnlyOneBreaksIt) {
  const auto g = ChordedCycleGraph::build(12, {{0, 2}, {6, 8}, {1, 4}, {3, 10}, {5, 7}, {9, 11}});
  const std::size_t e = idx(g, 0, 2);
  const std::size_t f = idx(g, 6, 8);
  // (1,4) crosses (0,2) but not (6,8).
  const Consecutiveness broken = consecutiveness(g, SpokeSubset::of({e, f, idx(g, 1, 4)}), e, f);
  EXPECT_FALSE(broken.by_definition);
  EXPECT_FALSE(broken.by_arcs);
  // (9,11) crosses neither and sits in the arc (8,0).
  EXPECT_TRUE(consecutive_in_set(g, SpokeSubset::of({e, f, idx(g, 9, 11)}), e, f));
  // (3,10) separates the pair without crossing either spoke.
  EXPECT_EQ(common_intersectors(g, SpokeSubset::of({e, f, idx(g, 3, 10)}), e, f), 0u);
}

// With two further spokes, one nested under each outer arc, the definition
// holds but no pair of opposite arcs is empty.
TEST(Consecutive, ReadingsDifferWithTwoNestedSpokes) {
  const auto g = ChordedCycleGraph::build(
      16, {{0, 4}, {8, 12}, {1, 3}, {5, 7}, {2, 10}, {6, 14}, {9, 11}, {13, 15}});
  const std::size_t e = idx(g, 0, 4);
  const std::size_t f = idx(g, 8, 12);
  const SpokeSubset set = SpokeSubset::of({e, f, idx(g, 1, 3), idx(g, 5, 7)});
  const Consecutiveness c = consecutiveness(g, set, e, f);
  EXPECT_TRUE(c.by_definition);
  EXPECT_FALSE(c.by_arcs);
  EXPECT_FALSE(consecutive_in_set(g, set, e, f));
}

// One further spoke nested under one arc keeps both readings true.
TEST(Consecutive, SingleNestedSpokeKeepsBothReadings) {
  const auto g = ChordedCycleGraph::build(
      16, {{0, 4}, {8, 12}, {1, 3}, {5, 7}, {2, 10}, {6, 14}, {9, 11}, {13, 15}});
  const std::size_t e = idx(g, 0, 4);
  const std::size_t f = idx(g, 8, 12);
  const Consecutiveness c = consecutiveness(g, SpokeSubset::of({e, f, idx(g, 1, 3)}), e, f);
  EXPECT_TRUE(c.by_definition);
  EXPECT_TRUE(c.by_arcs);
}

// The arc reading implies the definition on random inputs.
TEST(Consecutive, ArcsImplyDefinition) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 300; ++t) {
    const auto g = random_chorded_graph(12, rng);
    const SpokeSubset set(rng() & 0x3f);
    const auto members = set.indices();
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        const Consecutiveness c = consecutiveness(g, set, members[a], members[b]);
        if (c.by_arcs) EXPECT_TRUE(c.by_definition);
      }
    }
  }
}

TEST(Claims, CrossingPairIsTheBaseCaseException) {
  const auto g = testing::k4();
  const ClaimVerdict v = check_consecutive_pair_claim(g, SpokeSubset::of({0, 1}));
  EXPECT_EQ(v.status, ClaimStatus::inapplicable);
  EXPECT_TRUE(v.crossing_base_case);
  EXPECT_EQ(formed_cycle_count(g, SpokeSubset::of({0, 1})), 2);
}

TEST(Claims, ParallelPairHolds) {
  const auto g = testing::prism();
  const SpokeSubset set = SpokeSubset::of({idx(g, 0, 2), idx(g, 3, 5)});
  const ClaimVerdict pair = check_consecutive_pair_claim(g, set);
  EXPECT_EQ(pair.status, ClaimStatus::holds);
  EXPECT_EQ(pair.cycles, 1);
  const ClaimVerdict free = check_free_spoke_claim(g, set);
  EXPECT_EQ(free.status, ClaimStatus::holds);
  EXPECT_EQ(to_string(free.status), "holds");
}

TEST(Claims, FreeSpokeNeedsTwoSpokes) {
  const auto g = testing::prism();
  EXPECT_EQ(check_free_spoke_claim(g, SpokeSubset::of({0})).status, ClaimStatus::inapplicable);
  // All three spokes of K_{3,3} pairwise cross.
  const auto k = testing::k33();
  EXPECT_EQ(check_free_spoke_claim(k, SpokeSubset::of({0, 1, 2})).status,
            ClaimStatus::inapplicable);
  EXPECT_FALSE(has_unintersected_spoke(k, SpokeSubset::of({0, 1, 2})));
}

TEST(Claims, ExhaustiveOnSmallClassMembers) {
  std::mt19937_64 rng(101);
  std::size_t pair_applicable = 0;
  std::size_t free_applicable = 0;
  for (int v : {8, 10, 12}) {
    for (int t = 0; t < 20; ++t) {
      const auto g = random_class_member(v, rng);
      const std::uint64_t end = std::uint64_t{1} << g.spoke_count();
      for (std::uint64_t bits = 1; bits < end; ++bits) {
        const SpokeSubset set(bits);
        const ClaimVerdict a = check_consecutive_pair_claim(g, set);
        const ClaimVerdict b = check_free_spoke_claim(g, set);
        EXPECT_NE(a.status, ClaimStatus::violated);
        EXPECT_NE(b.status, ClaimStatus::violated);
        pair_applicable += a.status == ClaimStatus::holds ? 1 : 0;
        free_applicable += b.status == ClaimStatus::holds ? 1 : 0;
      }
    }
  }
  EXPECT_GT(pair_applicable, 500u);
  EXPECT_GT(free_applicable, 500u);
}

TEST(Sweep, CleanAndIndependentOfJobs) {
  ClaimSweepConfig config{{8, 10, 12, 14, 16}, 4000, 99, 1};
  const ClaimSweepReport one = sweep_claims(config);
  config.jobs = 3;
  const ClaimSweepReport three = sweep_claims(config);
  EXPECT_TRUE(one.clean());
  EXPECT_EQ(one.consecutive_pair.applicable, three.consecutive_pair.applicable);
  EXPECT_EQ(one.free_spoke.applicable, three.free_spoke.applicable);
  EXPECT_EQ(one.crossing_base_cases, three.crossing_base_cases);
  EXPECT_EQ(one.sparse_checked, 4000u);
  EXPECT_THROW(sweep_claims({{7}, 10, 1, 1}), std::invalid_argument);
}

class SparseSet : public ::testing::TestWithParam<int> {};

TEST_P(SparseSet, SizeAndStructure) {
  const int v = GetParam();
  std::mt19937_64 rng(static_cast<std::uint64_t>(v) * 7919);
  const int k = static_cast<int>(std::floor(std::sqrt(v)));
  for (int t = 0; t < 25; ++t) {
    const auto g = random_class_member(v, rng);
    const SparseSpokeSet s = find_sparse_spoke_set(g);
    EXPECT_EQ(s.block_size, k);
    ASSERT_EQ(s.blocks.size(), static_cast<std::size_t>(k));
    for (const auto& [lo, hi] : s.blocks) {
      EXPECT_GE(hi - lo, k);
      EXPECT_LE(hi - lo, k + 2);
    }
    EXPECT_GE(static_cast<int>(s.spokes.size()), v / 2 - 2 * k);
    EXPECT_EQ(s.spokes.size() + s.removed, g.spoke_count());
    for (std::size_t w : s.witness) EXPECT_TRUE(s.spokes.contains(w));
    if (s.kind == SparseCase::unintersected_spoke) {
      ASSERT_EQ(s.witness.size(), 1u);
      EXPECT_TRUE(has_unintersected_spoke(g, s.spokes));
    } else {
      ASSERT_EQ(s.witness.size(), 2u);
      EXPECT_TRUE(consecutive_in_set(g, s.spokes, s.witness[0], s.witness[1]));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(VertexCounts, SparseSet, ::testing::Values(16, 20, 36, 50, 64, 100));

TEST(UpperBound, Values) {
  const CycleUpperBound b16 = max_cycles_upper_bound(16);
  EXPECT_DOUBLE_EQ(b16.value, 511.875);
  EXPECT_EQ(b16.max_below, 511u);
  const CycleUpperBound b4 = max_cycles_upper_bound(4);
  EXPECT_DOUBLE_EQ(b4.value, 7.96875);
  EXPECT_EQ(b4.max_below, 7u);
  EXPECT_TRUE(b4.admits(7));  // K4
  // 2^(V/2+1) - 2^(V/2 - 2 sqrt V - 3) with sqrt V = 10.
  EXPECT_EQ(max_cycles_upper_bound(100).max_below,
            (CycleCount{1} << 51) - (CycleCount{1} << 27) - 1);
  EXPECT_THROW(max_cycles_upper_bound(5), std::invalid_argument);
  EXPECT_THROW(max_cycles_upper_bound(122), std::invalid_argument);
}

TEST(UpperBound, NonSquareValuesAreFloors) {
  for (int v = 6; v <= 60; v += 2) {
    const CycleUpperBound b = max_cycles_upper_bound(v);
    EXPECT_LT(static_cast<double>(b.max_below), b.value);
    EXPECT_GE(static_cast<double>(b.max_below) + 1.0, b.value);
  }
}

}  // namespace
}  // namespace spokecycles
