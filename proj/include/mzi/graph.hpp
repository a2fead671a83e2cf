#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace mzi {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices 0..n-1, adjacency stored as one
// 64-bit word per vertex. Values are immutable once built; every mutation
// below returns a fresh graph.
class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  // Edgeless graph on n vertices. Throws std::invalid_argument unless
  // 1 <= n <= kMaxOrder.
  explicit Graph(int n);

  // Throws on loops, out-of-range endpoints and repeated edges.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  // Rows must be symmetric and loop-free.
  static Graph from_rows(std::span<const std::uint64_t> rows);

  int order() const { return static_cast<int>(adj_.size()); }
  std::uint64_t neighbors(Vertex v) const { return adj_[v]; }
  std::span<const std::uint64_t> rows() const { return adj_; }
  bool has_edge(Vertex u, Vertex v) const { return (adj_[u] >> v) & 1U; }
  int degree(Vertex v) const { return std::popcount(adj_[v]); }
  int edge_count() const;
  std::vector<Edge> edges() const;
  std::uint64_t vertex_mask() const;

  // perm[v] is the new label of v; perm must be a permutation of 0..n-1.
  Graph relabeled(std::span<const int> perm) const;

  // Subgraph induced by `keep`, vertices renumbered in increasing order.
  Graph induced(std::uint64_t keep) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph() = default;
  void check_vertex(Vertex v) const;

  std::vector<std::uint64_t> adj_;

  friend Graph edge_add(const Graph&, Vertex, Vertex);
  friend Graph edge_delete(const Graph&, Vertex, Vertex);
};

inline std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

// Throws std::invalid_argument when u == v or uv is already an edge.
Graph edge_add(const Graph& g, Vertex u, Vertex v);
// Throws std::invalid_argument when uv is not an edge.
Graph edge_delete(const Graph& g, Vertex u, Vertex v);

// Non-increasing.
std::vector<int> degree_sequence(const Graph& g);

struct Components {
  int count = 0;
  // component[v] in 0..count-1, numbered by smallest member.
  std::vector<int> component;
  std::vector<std::uint64_t> members;
};

Components connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Vertices reachable from `from` inside the vertex set `within`.
std::uint64_t reachable(const Graph& g, Vertex from, std::uint64_t within);

// Vertices whose removal disconnects the graph.
std::uint64_t cut_vertices(const Graph& g);

}  // namespace mzi
