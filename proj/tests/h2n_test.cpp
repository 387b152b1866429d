#include <gtest/gtest.h>

#include "spokecycles/connectivity.hpp"
#include "spokecycles/graph6.hpp"
#include "spokecycles/h2n.hpp"
#include "spokecycles/isomorphism.hpp"
#include "test_util.hpp"

namespace spokecycles {
namespace {

TEST(H2n, SpokeListing) {
  const H2nGraph h = construct_h2n(8);
  EXPECT_EQ(h.graph.vertex_count(), 16);
  EXPECT_EQ(h.spoke(0), Edge(1, 15));
  EXPECT_EQ(h.spoke(1), Edge(0, 13));
  EXPECT_EQ(h.spoke(2), Edge(3, 14));
  EXPECT_EQ(h.spoke(3), Edge(2, 11));
  EXPECT_EQ(h.spoke(7), Edge(6, 8));
  EXPECT_EQ(h.alpha, Edge(0, 15));
  EXPECT_EQ(h.beta, Edge(7, 8));
  EXPECT_EQ(construct_h2n(7).spoke(6), Edge(6, 8));
  EXPECT_THROW(construct_h2n(1), std::invalid_argument);
}

TEST(H2n, SmallCasesAreKnownGraphs) {
  EXPECT_EQ(to_simple(construct_h2n(2).graph), testing::complete_graph(4));
  EXPECT_TRUE(are_isomorphic(to_simple(construct_h2n(3).graph), to_simple(testing::prism())));
}

// Encodings produced by networkx from the same spoke listing.
TEST(H2n, Graph6Encodings) {
  EXPECT_EQ(graph6_encode(to_simple(construct_h2n(3).graph)), "ElNG");
  EXPECT_EQ(graph6_encode(to_simple(construct_h2n(4).graph)), "GhMGmC");
  EXPECT_EQ(graph6_encode(to_simple(construct_h2n(5).graph)), "IhCg[CPoG");
  EXPECT_EQ(graph6_encode(to_simple(construct_h2n(6).graph)), "KhCGXCD_G_w@");
}

TEST(H2n, ThreeConnected) {
  for (int n = 2; n <= 30; ++n) {
    const H2nGraph h = construct_h2n(n);
    EXPECT_TRUE(h.three_connected) << n;
    EXPECT_EQ(vertex_connectivity(to_simple(h.graph)), 3) << n;
  }
}

TEST(H2n, IntersectionGraphIsPath) {
  for (int n = 2; n <= 20; ++n) {
    const SimpleGraph ig = intersection_graph(construct_h2n(n));
    ASSERT_EQ(ig.vertex_count(), n);
    EXPECT_EQ(ig.edge_count(), static_cast<std::size_t>(n - 1)) << n;
    for (int i = 0; i + 1 < n; ++i) EXPECT_TRUE(ig.has_edge(i, i + 1)) << n << " " << i;
  }
}

TEST(Reduction, ParseAndName) {
  for (ReductionEdge e :
       {ReductionEdge::alpha, ReductionEdge::beta, ReductionEdge::e0, ReductionEdge::e_last}) {
    EXPECT_EQ(parse_reduction_edge(to_string(e)), e);
  }
  EXPECT_THROW(parse_reduction_edge("gamma"), std::invalid_argument);
}

TEST(Reduction, AllDesignatedEdgesGiveSmallerMember) {
  for (int n = 3; n <= 12; ++n) {
    for (ReductionEdge e :
         {ReductionEdge::alpha, ReductionEdge::beta, ReductionEdge::e0, ReductionEdge::e_last}) {
      EXPECT_TRUE(verify_reduction(n, e)) << n << " " << to_string(e);
      EXPECT_EQ(reduce_h2n(n, e).vertex_count(), 2 * n - 2);
    }
  }
}

TEST(Reduction, OtherEdgesDoNotAlwaysReduce) {
  // A middle spoke of H_12 does not give H_10.
  const H2nGraph h = construct_h2n(6);
  const SimpleGraph reduced = delete_and_suppress(to_simple(h.graph), h.spoke(2));
  EXPECT_FALSE(are_isomorphic(reduced, to_simple(construct_h2n(5).graph)));
}

TEST(Reduction, K4HasNoSmallerMember) {
  EXPECT_THROW(verify_reduction(2, ReductionEdge::alpha), std::invalid_argument);
}

}  // namespace
}  // namespace spokecycles
