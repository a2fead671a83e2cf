#include "mzi/constructions.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "mzi/enumeration.hpp"

namespace mzi {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

void add(std::vector<Edge>& edges, int u, int v) { edges.emplace_back(u, v); }

void add_clique(std::vector<Edge>& edges, int first, int size) {
  for (int u = first; u < first + size; ++u) {
    for (int v = u + 1; v < first + size; ++v) add(edges, u, v);
  }
}

void append_graph(std::vector<Edge>& edges, const Graph& g, int offset) {
  for (auto [u, v] : g.edges()) add(edges, u + offset, v + offset);
}

// Partitions of `total` into exactly `parts` positive non-increasing parts.
void partitions(int total, int parts, int max_part, std::vector<int>& current,
                std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(current);
    return;
  }
  for (int x = std::min(max_part, total - (parts - 1)); x >= 1; --x) {
    if (x * parts < total) break;
    current.push_back(x);
    partitions(total - x, parts - 1, x, current, out);
    current.pop_back();
  }
}

}  // namespace

Graph complete(int n) {
  require(n >= 1, "complete: n must be >= 1");
  std::vector<Edge> edges;
  add_clique(edges, 0, n);
  return Graph::from_edges(n, edges);
}

Graph path(int n) {
  require(n >= 1, "path: n must be >= 1");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) add(edges, v, v + 1);
  return Graph::from_edges(n, edges);
}

Graph star(int n) {
  require(n >= 1, "star: n must be >= 1");
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) add(edges, 0, v);
  return Graph::from_edges(n, edges);
}

Graph empty(int n) {
  require(n >= 1, "empty: n must be >= 1");
  return Graph(n);
}

Graph cycle(int n) {
  require(n >= 3, "cycle: n must be >= 3");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) add(edges, v, (v + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int n = a.order() + b.order();
  require(n <= Graph::kMaxOrder, "combined order exceeds 64");
  std::vector<Edge> edges;
  append_graph(edges, a, 0);
  append_graph(edges, b, a.order());
  return Graph::from_edges(n, edges);
}

Graph join(const Graph& a, const Graph& b) {
  const int n = a.order() + b.order();
  require(n <= Graph::kMaxOrder, "join: combined order exceeds 64");
  std::vector<Edge> edges;
  append_graph(edges, a, 0);
  append_graph(edges, b, a.order());
  for (int u = 0; u < a.order(); ++u) {
    for (int v = 0; v < b.order(); ++v) add(edges, u, a.order() + v);
  }
  return Graph::from_edges(n, edges);
}

Graph k_n_k(int n, int k) {
  require(n >= 2, "k_n_k: n must be >= 2");
  require(k >= 1 && k <= n - 1, "k_n_k: k must satisfy 1 <= k <= n-1");
  std::vector<Edge> edges;
  add_clique(edges, 0, n - 1);
  for (int v = 0; v < k; ++v) add(edges, v, n - 1);
  return Graph::from_edges(n, edges);
}

Graph sandwich(int j, const Graph& h, int m) {
  require(j >= 1 && m >= 1, "sandwich: clique sizes must be >= 1");
  const int k = h.order();
  const int n = j + k + m;
  require(n <= Graph::kMaxOrder, "sandwich: order exceeds 64");
  std::vector<Edge> edges;
  add_clique(edges, 0, j);
  append_graph(edges, h, j);
  add_clique(edges, j + k, m);
  for (int x = j; x < j + k; ++x) {
    for (int u = 0; u < j; ++u) add(edges, u, x);
    for (int w = j + k; w < n; ++w) add(edges, x, w);
  }
  return Graph::from_edges(n, edges);
}

Graph g_a(int n, int p) {
  require(p >= 2 && n - p >= 1, "g_a: requires p >= 2 and n-p >= 1");
  require(n <= Graph::kMaxOrder, "g_a: order exceeds 64");
  const int core = n - p;
  const int base = p / core;
  const int extra = p % core;
  std::vector<Edge> edges;
  add_clique(edges, 0, core);
  int next = core;
  for (int v = 0; v < core; ++v) {
    const int count = base + (v < extra ? 1 : 0);
    for (int i = 0; i < count; ++i) add(edges, v, next++);
  }
  return Graph::from_edges(n, edges);
}

Graph g_s(int n, int p) {
  require(p >= 2 && p <= n - 2, "g_s: requires 2 <= p <= n-2");
  require(n <= Graph::kMaxOrder, "g_s: order exceeds 64");
  const int core = n - p;
  std::vector<Edge> edges;
  add_clique(edges, 0, core);
  for (int x = core; x < n; ++x) add(edges, 0, x);
  return Graph::from_edges(n, edges);
}

Graph a1_tree(int n, int p, const std::vector<int>& legs) {
  require(p >= 2, "a1_tree: p must be >= 2");
  require(static_cast<int>(legs.size()) == p, "a1_tree: need exactly p legs");
  for (int len : legs) require(len >= 1, "a1_tree: legs must be >= 1");
  require(std::accumulate(legs.begin(), legs.end(), 0) == n - 1,
          "a1_tree: leg lengths must sum to n-1");
  require(n <= Graph::kMaxOrder, "a1_tree: order exceeds 64");
  std::vector<Edge> edges;
  int next = 1;
  for (int len : legs) {
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      add(edges, prev, next);
      prev = next++;
    }
  }
  return Graph::from_edges(n, edges);
}

std::vector<Graph> a1_trees(int n, int p) {
  require(p >= 2 && p <= n - 1, "a1_trees: requires 2 <= p <= n-1");
  std::vector<std::vector<int>> legs;
  std::vector<int> current;
  partitions(n - 1, p, n - 1, current, legs);
  std::vector<Graph> out;
  for (const auto& l : legs) out.push_back(a1_tree(n, p, l));
  return out;
}

BalancedDegrees a2_degrees(int n, int p) {
  require(p >= 2 && n - p >= 1, "a2: requires p >= 2 and n-p >= 1");
  const int internal = n - p;
  const int total = 2 * n - p - 2;
  BalancedDegrees out;
  out.k = total / internal;
  out.r = total % internal;
  require(out.k >= 2, "a2: infeasible degree sequence (k < 2)");
  for (int i = 0; i < out.r; ++i) out.sequence.push_back(out.k + 1);
  for (int i = out.r; i < internal; ++i) out.sequence.push_back(out.k);
  for (int i = 0; i < p; ++i) out.sequence.push_back(1);
  return out;
}

std::vector<Graph> a2_trees(int n, int p) {
  const auto target = a2_degrees(n, p).sequence;
  require(n <= kMaxTreeOrder, "a2_trees: n beyond tree enumeration range");
  std::vector<Graph> out;
  for (auto& t : enumerate_trees(n)) {
    if (degree_sequence(t) == target) out.push_back(t);
  }
  require(!out.empty(), "a2_trees: no tree realises the degree sequence");
  return out;
}

std::vector<Graph> construct(const FamilyParams& q) {
  auto need = [&](const std::optional<int>& v, const char* name) {
    require(v.has_value(), q.family + " requires --" + name);
    return *v;
  };
  const std::string& f = q.family;
  if (f == "complete") return {complete(q.n)};
  if (f == "path") return {path(q.n)};
  if (f == "star") return {star(q.n)};
  if (f == "cycle") return {cycle(q.n)};
  if (f == "knk") return {k_n_k(q.n, need(q.k, "k"))};
  if (f == "sandwich") {
    const int k = need(q.k, "k");
    const int j = need(q.j, "j");
    require(k >= 1, "sandwich: k must be >= 1");
    return {sandwich(j, complete(k), q.n - k - j)};
  }
  if (f == "ga") return {g_a(q.n, need(q.p, "p"))};
  if (f == "gs") return {g_s(q.n, need(q.p, "p"))};
  if (f == "a1") {
    const int p = need(q.p, "p");
    if (q.legs.empty()) return a1_trees(q.n, p);
    return {a1_tree(q.n, p, q.legs)};
  }
  if (f == "a2") return a2_trees(q.n, need(q.p, "p"));
  throw std::invalid_argument("unknown family '" + f + "'");
}

}  // namespace mzi
