#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mzi/graph.hpp"

namespace mzi {

// All builders throw std::invalid_argument on out-of-range parameters.

Graph complete(int n);
Graph path(int n);
Graph star(int n);  // centre 0
Graph empty(int n);
Graph cycle(int n);  // n >= 3

Graph disjoint_union(const Graph& a, const Graph& b);
// Disjoint union plus every edge between the two vertex sets.
Graph join(const Graph& a, const Graph& b);

// K_{n-1} on vertices 0..n-2 plus vertex n-1 adjacent to 0..k-1.
// Requires 1 <= k <= n-1.
Graph k_n_k(int n, int k);

// K_j joined to h, h joined to K_m, and no K_j-K_m edges. Vertex order:
// clique of size j, then h, then clique of size m. Requires j, m >= 1.
Graph sandwich(int j, const Graph& h, int m);

// Clique K_{n-p} (vertices 0..n-p-1) with p pendant vertices spread so that
// the counts per clique vertex differ by at most one; the first t = p mod
// (n-p) clique vertices carry the extra pendant. Requires p >= 2, n-p >= 1.
Graph g_a(int n, int p);

// Clique K_{n-p} with every pendant on vertex 0. Requires 2 <= p <= n-2.
// For n-p = 2 the other clique vertex is itself a leaf, so the result is the
// star with p+1 pendants.
Graph g_s(int n, int p);

// Spider: centre 0 of degree p with one path of each given length.
// Requires p >= 2 legs, each >= 1, summing to n-1.
Graph a1_tree(int n, int p, const std::vector<int>& legs);

// All spiders with p legs on n vertices, one per leg multiset (the leg
// multiset determines the spider up to isomorphism).
std::vector<Graph> a1_trees(int n, int p);

// k and r with 2n-p-2 = k(n-p) + r, 0 <= r < n-p.
struct BalancedDegrees {
  int k = 0;
  int r = 0;
  std::vector<int> sequence;  // non-increasing, includes the p ones
};
BalancedDegrees a2_degrees(int n, int p);

// Every tree (up to isomorphism) whose degree sequence is a2_degrees(n,p).
// Requires p >= 2, n-p >= 1 and n within the tree enumeration range.
std::vector<Graph> a2_trees(int n, int p);

struct FamilyParams {
  std::string family;  // complete|path|star|cycle|knk|sandwich|ga|gs|a1|a2
  int n = 0;
  std::optional<int> k;
  std::optional<int> p;
  std::optional<int> j;
  std::vector<int> legs;
};

// Dispatches on params.family. Only a1 without legs and a2 can yield more
// than one graph. sandwich uses H = K_k and m = n-k-j.
std::vector<Graph> construct(const FamilyParams& params);

}  // namespace mzi
