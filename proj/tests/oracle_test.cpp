#include <gtest/gtest.h>

#include "spokecycles/cycle_engine.hpp"
#include "spokecycles/graph6.hpp"
#include "spokecycles/h2n.hpp"
#include "spokecycles/oracle.hpp"
#include "test_util.hpp"

namespace spokecycles {
namespace {

// Reference counts from networkx.simple_cycles.
TEST(Oracle, KnownCounts) {
  EXPECT_EQ(count_all_cycles(testing::complete_graph(4)), 7u);
  EXPECT_EQ(count_all_cycles(testing::complete_graph(5)), 37u);
  EXPECT_EQ(count_all_cycles(to_simple(testing::k33())), 15u);
  EXPECT_EQ(count_all_cycles(testing::petersen_graph()), 57u);
  EXPECT_EQ(count_all_cycles(testing::cycle_graph(5)), 1u);
  EXPECT_EQ(count_all_cycles(testing::path_graph(5)), 0u);
  EXPECT_EQ(count_all_cycles(SimpleGraph(3, {})), 0u);
  EXPECT_EQ(count_all_cycles(graph6_decode("ShCHGD@?K?_@?@?C_GGG@??cG?G?GK_?C")), 1168u);
}

TEST(Oracle, ListIsCanonicalAndSorted) {
  const CycleList list = enumerate_all_cycles(testing::complete_graph(4));
  ASSERT_EQ(list.size(), 7u);
  EXPECT_TRUE(std::is_sorted(list.cycles.begin(), list.cycles.end()));
  for (const auto& c : list.cycles) {
    EXPECT_EQ(c.front(), *std::min_element(c.begin(), c.end()));
    EXPECT_LT(c[1], c.back());
  }
  EXPECT_EQ(list.cycles.front(), (std::vector<Vertex>{0, 1, 2}));
}

TEST(Oracle, JobsDoNotChangeOutput) {
  const SimpleGraph g = to_simple(construct_h2n(7).graph);
  EXPECT_EQ(enumerate_all_cycles(g, {.max_vertices = 20, .jobs = 1}).cycles,
            enumerate_all_cycles(g, {.max_vertices = 20, .jobs = 3}).cycles);
}

TEST(Oracle, CapIsEnforced) {
  EXPECT_THROW(count_all_cycles(testing::cycle_graph(21)), CapExceeded);
  EXPECT_EQ(count_all_cycles(testing::cycle_graph(21), {.max_vertices = 21, .jobs = 1}), 1u);
}

TEST(Oracle, CyclomaticNumber) {
  EXPECT_EQ(cyclomatic_number(testing::complete_graph(4)), 3);
  EXPECT_EQ(cyclomatic_number(testing::path_graph(4)), 0);
  EXPECT_EQ(cyclomatic_number(SimpleGraph(4, {})), 0);
  EXPECT_EQ(cyclomatic_number(to_simple(construct_h2n(6).graph)), 7);
}

TEST(Oracle, AgreesWithSubsetCounterOnH2n) {
  for (int n = 2; n <= 9; ++n) {
    const H2nGraph h = construct_h2n(n);
    EXPECT_EQ(count_all_cycles(to_simple(h.graph)), count_cycles(h.graph)) << n;
  }
}

// Dense graphs stay within 2^r - 1.
TEST(Oracle, CompleteGraphsRespectCycleSpaceBound) {
  for (int n = 3; n <= 8; ++n) {
    const SimpleGraph g = testing::complete_graph(n);
    const CycleCount c = count_all_cycles(g);
    EXPECT_LE(c, (CycleCount{1} << cyclomatic_number(g)) - 1);
  }
}

}  // namespace
}  // namespace spokecycles
