#include <gtest/gtest.h>

#include <numeric>

#include "mzi/constructions.hpp"
#include "mzi/graph.hpp"

using namespace mzi;

TEST(Graph, RejectsBadOrder) {
  EXPECT_THROW(Graph(0), std::invalid_argument);
  EXPECT_THROW(Graph(65), std::invalid_argument);
  EXPECT_NO_THROW(Graph(64));
}

TEST(Graph, FromEdgesValidates) {
  EXPECT_THROW(Graph::from_edges(3, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);
  EXPECT_THROW(Graph::from_edges(3, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST(Graph, FromRowsValidates) {
  const std::uint64_t asym[] = {0b10, 0b00};
  EXPECT_THROW(Graph::from_rows(asym), std::invalid_argument);
  const std::uint64_t loop[] = {0b01};
  EXPECT_THROW(Graph::from_rows(loop), std::invalid_argument);
  const std::uint64_t ok[] = {0b10, 0b01};
  EXPECT_EQ(Graph::from_rows(ok), Graph::from_edges(2, {{0, 1}}));
}

TEST(Graph, EdgeAddCompletesTriangle) {
  const Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(edge_add(p3, 0, 2), complete(3));
}

TEST(Graph, EdgeAddOnStar) {
  EXPECT_EQ(degree_sequence(edge_add(star(4), 1, 2)), (std::vector<int>{3, 2, 2, 1}));
}

TEST(Graph, EdgeAddExistingThrows) {
  EXPECT_THROW(edge_add(complete(3), 0, 1), std::invalid_argument);
  EXPECT_THROW(edge_add(complete(3), 1, 1), std::invalid_argument);
}

TEST(Graph, EdgeDelete) {
  EXPECT_EQ(edge_delete(complete(3), 0, 2), Graph::from_edges(3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(degree_sequence(edge_delete(complete(4), 1, 3)),
            (std::vector<int>{3, 3, 2, 2}));
  EXPECT_THROW(edge_delete(path(3), 0, 2), std::invalid_argument);
}

TEST(Graph, DegreeSequences) {
  EXPECT_EQ(degree_sequence(k_n_k(5, 2)), (std::vector<int>{4, 4, 3, 3, 2}));
  EXPECT_EQ(degree_sequence(path(4)), (std::vector<int>{2, 2, 1, 1}));
  EXPECT_EQ(degree_sequence(complete(4)), (std::vector<int>{3, 3, 3, 3}));
}

TEST(Graph, Components) {
  EXPECT_EQ(connected_components(path(5)).count, 1);
  const auto two = connected_components(disjoint_union(complete(3), complete(2)));
  EXPECT_EQ(two.count, 2);
  EXPECT_EQ(two.component, (std::vector<int>{0, 0, 0, 1, 1}));
  EXPECT_EQ(connected_components(empty(4)).count, 4);
  EXPECT_FALSE(is_connected(empty(2)));
  EXPECT_TRUE(is_connected(Graph(1)));
}

TEST(Graph, CutVertices) {
  EXPECT_EQ(cut_vertices(path(4)), bit(1) | bit(2));
  EXPECT_EQ(cut_vertices(star(5)), bit(0));
  EXPECT_EQ(cut_vertices(cycle(5)), 0U);
  EXPECT_EQ(cut_vertices(complete(2)), 0U);
}

TEST(Graph, RelabelAndInduce) {
  const Graph p3 = path(3);
  const std::vector<int> perm{1, 0, 2};
  const Graph q = p3.relabeled(perm);
  EXPECT_TRUE(q.has_edge(1, 0));
  EXPECT_TRUE(q.has_edge(0, 2));
  EXPECT_FALSE(q.has_edge(1, 2));
  const std::vector<int> bad{0, 0, 1};
  EXPECT_THROW(p3.relabeled(bad), std::invalid_argument);
  EXPECT_EQ(complete(5).induced(bit(0) | bit(2) | bit(4)), complete(3));
}

TEST(GraphProperty, AddThenDeleteIsIdentityAndHandshake) {
  for (int n = 2; n <= 7; ++n) {
    const Graph g = path(n);
    for (int u = 0; u < g.order(); ++u) {
      for (int v = u + 1; v < g.order(); ++v) {
        if (g.has_edge(u, v)) continue;
        EXPECT_EQ(edge_delete(edge_add(g, u, v), u, v), g);
      }
    }
    const auto seq = degree_sequence(g);
    EXPECT_EQ(std::accumulate(seq.begin(), seq.end(), 0), 2 * g.edge_count());
  }
}
