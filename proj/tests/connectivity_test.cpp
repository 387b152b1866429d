#include <gtest/gtest.h>

#include <random>

#include "spokecycles/connectivity.hpp"
#include "test_util.hpp"

namespace spokecycles {
namespace {

TEST(VertexConnectivity, KnownGraphs) {
  EXPECT_EQ(vertex_connectivity(testing::complete_graph(4)), 3);
  EXPECT_EQ(vertex_connectivity(testing::complete_graph(5)), 4);
  EXPECT_EQ(vertex_connectivity(testing::cycle_graph(6)), 2);
  EXPECT_EQ(vertex_connectivity(testing::path_graph(5)), 1);
  EXPECT_EQ(vertex_connectivity(testing::petersen_graph()), 3);
  EXPECT_EQ(vertex_connectivity(SimpleGraph(4, {{0, 1}, {2, 3}})), 0);
}

TEST(ThreeConnected, SmallClassMembers) {
  EXPECT_TRUE(is_three_connected(testing::k4()));
  EXPECT_TRUE(is_three_connected(testing::prism()));
  EXPECT_TRUE(is_three_connected(testing::k33()));
  EXPECT_TRUE(is_three_connected(testing::petersen_graph()));
  EXPECT_FALSE(is_three_connected(testing::cycle_graph(6)));
}

TEST(ThreeConnected, DetectsTwoCut) {
  // Two K4-minus-an-edge blocks joined by two edges: {0,4} style 2-cut.
  const auto g = ChordedCycleGraph::build(8, {{0, 2}, {1, 3}, {4, 6}, {5, 7}});
  EXPECT_FALSE(is_three_connected(g));
  EXPECT_FALSE(is_three_connected(to_simple(g)));
  EXPECT_EQ(vertex_connectivity(to_simple(g)), 2);
}

TEST(ThreeConnected, TooSmallThrows) {
  EXPECT_THROW(is_three_connected(testing::complete_graph(3)), GraphError);
}

// The chorded test, the pair-removal test and max flow agree on random
// chorded cycles.
TEST(ThreeConnected, RoutesAgreeOnRandomGraphs) {
  std::mt19937_64 rng(2024);
  int positives = 0;
  int negatives = 0;
  for (int v : {6, 8, 10, 12, 14, 16, 20}) {
    for (int i = 0; i < 150; ++i) {
      const auto g = random_chorded_graph(v, rng);
      const SimpleGraph s = to_simple(g);
      const bool flow = vertex_connectivity(s) >= 3;
      EXPECT_EQ(is_three_connected(g), flow);
      EXPECT_EQ(is_three_connected(s), flow);
      EXPECT_EQ(is_three_connected_chorded(g.partners()), flow);
      (flow ? positives : negatives) += 1;
    }
  }
  EXPECT_GT(positives, 100);
  EXPECT_GT(negatives, 100);
}

}  // namespace
}  // namespace spokecycles
