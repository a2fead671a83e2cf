#include <gtest/gtest.h>

#include "mzi/canonical.hpp"
#include "mzi/connectivity.hpp"
#include "mzi/constructions.hpp"
#include "mzi/indices.hpp"

using namespace mzi;

TEST(Constructions, BasicFamilies) {
  EXPECT_EQ(degree_sequence(star(5)), (std::vector<int>{4, 1, 1, 1, 1}));
  EXPECT_EQ(degree_sequence(path(4)), (std::vector<int>{2, 2, 1, 1}));
  EXPECT_EQ(degree_sequence(complete(4)), (std::vector<int>{3, 3, 3, 3}));
  EXPECT_EQ(cycle(4).edge_count(), 4);
  EXPECT_THROW(cycle(2), std::invalid_argument);
}

TEST(Constructions, Join) {
  EXPECT_EQ(join(Graph(1), Graph(1)), complete(2));
  EXPECT_EQ(join(Graph(1), path(2)), complete(3));
  EXPECT_EQ(degree_sequence(join(empty(2), empty(3))), (std::vector<int>{3, 3, 2, 2, 2}));
}

TEST(Constructions, Knk) {
  EXPECT_EQ(degree_sequence(k_n_k(5, 2)), (std::vector<int>{4, 4, 3, 3, 2}));
  EXPECT_EQ(pi1_exact(k_n_k(5, 2)), 82944);
  EXPECT_EQ(pi2_exact(k_n_k(5, 1)), 5038848);
  for (int n = 2; n <= 9; ++n) EXPECT_EQ(k_n_k(n, n - 1), complete(n));
  EXPECT_THROW(k_n_k(5, 5), std::invalid_argument);
  EXPECT_THROW(k_n_k(5, 0), std::invalid_argument);
}

TEST(Constructions, Sandwich) {
  const Graph g = sandwich(2, Graph(1), 3);
  std::vector<int> degrees;
  for (int v = 0; v < g.order(); ++v) degrees.push_back(g.degree(v));
  EXPECT_EQ(degrees, (std::vector<int>{2, 2, 5, 3, 3, 3}));
  EXPECT_EQ(pi1_exact(g), 291600);
  EXPECT_EQ(pi1_exact(sandwich(1, Graph(1), 4)), 1638400);
  for (int n = 3; n <= 9; ++n) {
    for (int k = 1; k <= n - 2; ++k) {
      EXPECT_TRUE(isomorphic(sandwich(1, complete(k), n - k - 1), k_n_k(n, k)));
    }
  }
  EXPECT_THROW(sandwich(0, Graph(1), 2), std::invalid_argument);
}

TEST(Constructions, Ga) {
  EXPECT_EQ(pi1_exact(g_a(6, 3)), 729);
  EXPECT_EQ(pi1_exact(g_a(7, 3)), 36864);
  EXPECT_TRUE(isomorphic(g_a(5, 4), star(5)));
  for (int n = 3; n <= 12; ++n) {
    for (int p = 2; p <= n - 1; ++p) {
      const Graph g = g_a(n, p);
      EXPECT_EQ(pendant_count(g), p) << n << ' ' << p;
      EXPECT_TRUE(is_connected(g));
      int lo = n, hi = 0;
      for (int v = 0; v < n - p; ++v) {
        const int pendants = std::popcount(g.neighbors(v) & pendant_vertices(g));
        lo = std::min(lo, pendants);
        hi = std::max(hi, pendants);
      }
      if (n - p >= 2) EXPECT_LE(hi - lo, 1);
    }
  }
}

TEST(Constructions, Gs) {
  EXPECT_EQ(pi2_exact(g_s(6, 3)), 50000);
  EXPECT_EQ(pi2_exact(g_s(7, 3)), 918330048);
  EXPECT_THROW(g_s(6, 5), std::invalid_argument);
  EXPECT_EQ(pendant_count(g_s(5, 3)), 4);
}

TEST(Constructions, Spiders) {
  const Graph s = a1_tree(6, 3, {2, 2, 1});
  EXPECT_EQ(degree_sequence(s), (std::vector<int>{3, 2, 2, 1, 1, 1}));
  EXPECT_EQ(pi1_exact(s), 144);
  EXPECT_TRUE(isomorphic(a1_tree(5, 2, {2, 2}), path(5)));
  EXPECT_TRUE(isomorphic(a1_tree(6, 5, {1, 1, 1, 1, 1}), star(6)));
  EXPECT_THROW(a1_tree(6, 3, {2, 2, 2}), std::invalid_argument);
  for (int n = 4; n <= 10; ++n) {
    for (int p = 2; p <= n - 1; ++p) {
      const auto spiders = a1_trees(n, p);
      ASSERT_FALSE(spiders.empty());
      for (const auto& t : spiders) {
        EXPECT_EQ(pendant_count(t), p);
        EXPECT_EQ(pi1_exact(t), pi1_exact(spiders.front()));
        EXPECT_EQ(pi2_exact(t), pi2_exact(spiders.front()));
      }
    }
  }
}

TEST(Constructions, BalancedTrees) {
  const auto d = a2_degrees(7, 3);
  EXPECT_EQ(d.k, 2);
  EXPECT_EQ(d.r, 1);
  EXPECT_EQ(d.sequence, (std::vector<int>{3, 2, 2, 2, 1, 1, 1}));
  for (const auto& t : a2_trees(7, 3)) EXPECT_EQ(pi2_exact(t), 1728);
  const auto six = a2_trees(6, 3);
  ASSERT_FALSE(six.empty());
  for (const auto& t : six) {
    EXPECT_EQ(degree_sequence(t), (std::vector<int>{3, 2, 2, 1, 1, 1}));
    EXPECT_EQ(pi2_exact(t), 432);
  }
  const auto four = a2_trees(4, 2);
  ASSERT_EQ(four.size(), 1U);
  EXPECT_TRUE(isomorphic(four.front(), path(4)));
}

TEST(Constructions, DispatchByFamily) {
  EXPECT_EQ(construct({.family = "knk", .n = 5, .k = 2}).front(), k_n_k(5, 2));
  EXPECT_EQ(construct({.family = "gs", .n = 6, .p = 3}).front(), g_s(6, 3));
  EXPECT_EQ(construct({.family = "a1", .n = 7, .p = 3}).size(), a1_trees(7, 3).size());
  EXPECT_THROW(construct({.family = "knk", .n = 5, .k = 5}), std::invalid_argument);
  EXPECT_THROW(construct({.family = "knk", .n = 5}), std::invalid_argument);
  EXPECT_THROW(construct({.family = "bogus", .n = 5}), std::invalid_argument);
}

TEST(ConstructionsProperty, AllConnected) {
  for (int n = 4; n <= 9; ++n) {
    for (int k = 1; k <= n - 1; ++k) EXPECT_TRUE(is_connected(k_n_k(n, k)));
    for (int p = 2; p <= n - 2; ++p) {
      EXPECT_TRUE(is_connected(g_s(n, p)));
      for (const auto& t : a2_trees(n, p)) EXPECT_TRUE(is_connected(t));
    }
  }
}
