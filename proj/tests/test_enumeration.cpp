#include <gtest/gtest.h>

#include <set>

#include "mzi/canonical.hpp"
#include "mzi/constructions.hpp"
#include "mzi/enumeration.hpp"
#include "mzi/graph6.hpp"
#include "oracles.hpp"

using namespace mzi;

namespace {

std::set<std::uint64_t> brute_codes(const std::vector<Graph>& graphs) {
  std::set<std::uint64_t> out;
  for (const auto& g : graphs) out.insert(oracle::permutation_canonical(g));
  return out;
}

std::set<std::string> codes(const std::vector<Graph>& graphs) {
  std::set<std::string> out;
  for (const auto& g : graphs) out.insert(canonical_form(g).bytes);
  return out;
}

}  // namespace

TEST(Enumeration, ConnectedMatchesLabeledOracleUpTo6) {
  for (int n = 1; n <= 6; ++n) {
    const auto graphs = enumerate_connected(n);
    const auto oracle_set = oracle::connected_classes(n);
    EXPECT_EQ(graphs.size(), oracle_set.size()) << n;
    EXPECT_EQ(brute_codes(graphs), oracle_set) << n;
  }
}

TEST(Enumeration, ConnectedCounts) {
  const std::size_t expected[] = {1, 1, 2, 6, 21, 112, 853, 11117};
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(enumerate_connected(n).size(), expected[n - 1]);
}

TEST(Enumeration, TreesMatchPrueferOracleUpTo7) {
  for (int n = 1; n <= 7; ++n) {
    EXPECT_EQ(brute_codes(enumerate_trees(n)), oracle::tree_classes(n)) << n;
  }
}

TEST(Enumeration, TreeCounts) {
  const std::size_t expected[] = {1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
  for (int n = 2; n <= 12; ++n) EXPECT_EQ(enumerate_trees(n).size(), expected[n - 2]);
}

TEST(Enumeration, TreesAreTheSparseConnectedGraphs) {
  for (int n = 2; n <= 8; ++n) {
    std::vector<Graph> sparse;
    for (const auto& g : enumerate_connected(n)) {
      if (g.edge_count() == n - 1) sparse.push_back(g);
    }
    EXPECT_EQ(codes(sparse), codes(enumerate_trees(n)));
  }
}

TEST(Enumeration, NoDuplicatesAndSorted) {
  for (int n = 1; n <= 8; ++n) {
    const auto graphs = enumerate_connected(n);
    std::vector<std::string> list;
    for (const auto& g : graphs) list.push_back(canonical_form(g).bytes);
    EXPECT_TRUE(std::is_sorted(list.begin(), list.end()));
    EXPECT_EQ(std::set<std::string>(list.begin(), list.end()).size(), list.size());
    for (const auto& g : graphs) EXPECT_EQ(to_graph6(g), canonical_form(g).bytes);
  }
}

TEST(Enumeration, IndependentOfJobCount) {
  EXPECT_EQ(detail::generate(7, false, 1), detail::generate(7, false, 4));
  EXPECT_EQ(detail::generate(10, true, 1), detail::generate(10, true, 3));
}

TEST(Enumeration, Graph6RoundTripOnEveryGraphUpTo8) {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& g : enumerate_connected(n)) ASSERT_EQ(parse_graph6(to_graph6(g)), g);
  }
}

TEST(Enumeration, RangeChecks) {
  EXPECT_THROW(enumerate_connected(0), std::invalid_argument);
  EXPECT_THROW(enumerate_connected(kMaxConnectedOrder + 1), std::invalid_argument);
  EXPECT_THROW(enumerate_trees(kMaxTreeOrder + 1), std::invalid_argument);
}

TEST(Enumeration, ClassFilter) {
  for (int n = 2; n <= 6; ++n) {
    for (int k = 1; k <= n - 1; ++k) {
      std::size_t count = 0;
      for (const auto& g : enumerate_connected(n)) {
        if (oracle::vertex_connectivity(g) <= k) ++count;
      }
      EXPECT_EQ(enumerate_class(ClassConstraint::vertex(n, k)).size(), count);
    }
  }
  EXPECT_EQ(enumerate_class(ClassConstraint::vertex(7, 6)).size(), 853U);
  for (const auto& g : enumerate_class(ClassConstraint::pendants(5, 2))) {
    EXPECT_EQ(pendant_count(g), 2);
  }
  EXPECT_THROW(enumerate_class(ClassConstraint::vertex(5, 5)), std::invalid_argument);
}

TEST(Extremal, Examples) {
  const auto r = extremal_search(ClassConstraint::vertex(5, 2), Index::kPi1, Direction::kMax);
  EXPECT_EQ(r.value, 82944);
  ASSERT_EQ(r.witnesses.size(), 1U);
  EXPECT_EQ(r.witnesses.front(), canonical_form(k_n_k(5, 2)));

  for (int k = 1; k <= 5; ++k) {
    const auto m = extremal_search(ClassConstraint::vertex(6, k), Index::kPi2, Direction::kMin);
    EXPECT_EQ(m.value, 256);
    ASSERT_EQ(m.witnesses.size(), 1U);
    EXPECT_EQ(m.witnesses.front(), canonical_form(path(6)));
  }

  const auto s = extremal_search(ClassConstraint::pendants(6, 3), Index::kPi1, Direction::kMin);
  EXPECT_EQ(s.value, 144);
  std::set<std::string> expected;
  for (const auto& t : a1_trees(6, 3)) expected.insert(canonical_form(t).bytes);
  std::set<std::string> observed;
  for (const auto& w : s.witnesses) observed.insert(w.bytes);
  EXPECT_EQ(observed, expected);
}

TEST(Extremal, WitnessSetIsExactlyTheAttainers) {
  const auto c = ClassConstraint::edge(6, 2);
  for (auto index : {Index::kPi1, Index::kPi2}) {
    for (auto dir : {Direction::kMax, Direction::kMin}) {
      const auto r = extremal_search(c, index, dir);
      std::set<std::string> attainers;
      std::size_t size = 0;
      for (const auto& g : enumerate_connected(6)) {
        if (oracle::edge_connectivity(g) > 2) continue;
        ++size;
        const auto v = index_value(g, index);
        if (dir == Direction::kMax) EXPECT_LE(v, r.value);
        else EXPECT_GE(v, r.value);
        if (v == r.value) attainers.insert(canonical_form(g).bytes);
      }
      std::set<std::string> witnesses;
      for (const auto& w : r.witnesses) witnesses.insert(w.bytes);
      EXPECT_EQ(witnesses, attainers);
      EXPECT_EQ(r.class_size, size);
    }
  }
}

TEST(Extremal, Errors) {
  EXPECT_THROW(extremal_search(ClassConstraint::pendants(4, 4), Index::kPi1, Direction::kMax),
               std::invalid_argument);
  EXPECT_THROW(extremal_search(ClassConstraint::vertex(10, 2), Index::kPi1, Direction::kMax),
               std::invalid_argument);
  EXPECT_EQ(extremal_search(ClassConstraint::pendants(3, 2), Index::kPi1, Direction::kMax).value,
            4);
}
