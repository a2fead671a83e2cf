#include "mzi/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace mzi {

namespace {

// Dense Edmonds-Karp; networks here have at most 128 nodes.
class MaxFlow {
 public:
  explicit MaxFlow(int nodes) : n_(nodes), cap_(nodes * nodes, 0) {}

  void add_arc(int from, int to, int capacity) { cap_[from * n_ + to] += capacity; }

  // Stops early once the flow reaches `limit`.
  int run(int source, int sink, int limit) {
    int flow = 0;
    std::vector<int> parent(n_);
    while (flow < limit) {
      std::fill(parent.begin(), parent.end(), -1);
      parent[source] = source;
      std::queue<int> queue;
      queue.push(source);
      while (!queue.empty() && parent[sink] < 0) {
        int x = queue.front();
        queue.pop();
        for (int y = 0; y < n_; ++y) {
          if (parent[y] < 0 && cap_[x * n_ + y] > 0) {
            parent[y] = x;
            queue.push(y);
          }
        }
      }
      if (parent[sink] < 0) break;
      int push = std::numeric_limits<int>::max();
      for (int y = sink; y != source; y = parent[y]) {
        push = std::min(push, cap_[parent[y] * n_ + y]);
      }
      for (int y = sink; y != source; y = parent[y]) {
        cap_[parent[y] * n_ + y] -= push;
        cap_[y * n_ + parent[y]] += push;
      }
      flow += push;
    }
    return flow;
  }

 private:
  int n_;
  std::vector<int> cap_;
};

void require_connected(const Graph& g, const char* what) {
  if (g.order() < 2) {
    throw std::invalid_argument(std::string(what) + ": needs at least 2 vertices");
  }
  if (!is_connected(g)) {
    throw std::invalid_argument(std::string(what) + ": graph is disconnected");
  }
}

// Internally vertex-disjoint s-t paths, s and t non-adjacent.
int local_vertex_connectivity(const Graph& g, int s, int t, int limit) {
  const int n = g.order();
  const int big = n;
  MaxFlow flow(2 * n);
  for (int v = 0; v < n; ++v) {
    flow.add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? big : 1);
  }
  for (auto [u, v] : g.edges()) {
    flow.add_arc(2 * u + 1, 2 * v, big);
    flow.add_arc(2 * v + 1, 2 * u, big);
  }
  return flow.run(2 * s + 1, 2 * t, limit);
}

}  // namespace

int vertex_connectivity(const Graph& g) {
  require_connected(g, "vertex_connectivity");
  const int n = g.order();
  int best = n - 1;
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      if (g.has_edge(s, t)) continue;
      best = std::min(best, local_vertex_connectivity(g, s, t, best));
    }
  }
  return best;
}

int edge_connectivity(const Graph& g) {
  require_connected(g, "edge_connectivity");
  const int n = g.order();
  int best = n - 1;
  for (int t = 1; t < n; ++t) {
    MaxFlow flow(n);
    for (auto [u, v] : g.edges()) {
      flow.add_arc(u, v, 1);
      flow.add_arc(v, u, 1);
    }
    best = std::min(best, flow.run(0, t, best));
  }
  return best;
}

std::uint64_t pendant_vertices(const Graph& g) {
  std::uint64_t out = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) out |= bit(v);
  }
  return out;
}

int pendant_count(const Graph& g) { return std::popcount(pendant_vertices(g)); }

const char* class_kind_name(ClassKind kind) {
  switch (kind) {
    case ClassKind::kVertexConnectivity: return "vnk";
    case ClassKind::kEdgeConnectivity: return "enk";
    case ClassKind::kPendants: return "gnp";
  }
  return "?";
}

void ClassConstraint::validate() const {
  if (n < 1 || n > Graph::kMaxOrder) {
    throw std::invalid_argument("class order must be in 1..64");
  }
  switch (kind) {
    case ClassKind::kVertexConnectivity:
    case ClassKind::kEdgeConnectivity:
      if (bound < 1 || bound > n - 1) {
        throw std::invalid_argument("connectivity cap k must satisfy 1 <= k <= n-1");
      }
      break;
    case ClassKind::kPendants:
      if (bound < 2 || bound > n - 1) {
        throw std::invalid_argument("pendant count p must satisfy 2 <= p <= n-1");
      }
      break;
  }
}

std::string ClassConstraint::describe() const {
  std::string param = kind == ClassKind::kPendants ? "p" : "k";
  return std::string(class_kind_name(kind)) + "(n=" + std::to_string(n) + "," +
         param + "=" + std::to_string(bound) + ")";
}

bool in_class(const Graph& g, const ClassConstraint& c) {
  if (g.order() != c.n || g.order() < 2 || !is_connected(g)) return false;
  switch (c.kind) {
    case ClassKind::kVertexConnectivity: return vertex_connectivity(g) <= c.bound;
    case ClassKind::kEdgeConnectivity: return edge_connectivity(g) <= c.bound;
    case ClassKind::kPendants: return pendant_count(g) == c.bound;
  }
  return false;
}

}  // namespace mzi
