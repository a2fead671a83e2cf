#include "mzi/graph.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace mzi {

Graph::Graph(int n) {
  if (n < 1 || n > kMaxOrder) {
    throw std::invalid_argument("graph order must be in 1..64, got " +
                                std::to_string(n));
  }
  adj_.assign(n, 0);
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order()) {
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " out of range for order " +
                                std::to_string(order()));
  }
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at " + std::to_string(u));
    if (g.has_edge(u, v)) {
      throw std::invalid_argument("repeated edge " + std::to_string(u) + "-" +
                                  std::to_string(v));
    }
    g.adj_[u] |= bit(v);
    g.adj_[v] |= bit(u);
  }
  return g;
}

Graph Graph::from_rows(std::span<const std::uint64_t> rows) {
  Graph g(static_cast<int>(rows.size()));
  const int n = g.order();
  for (int v = 0; v < n; ++v) {
    if (n < 64 && (rows[v] >> n) != 0) {
      throw std::invalid_argument("row has bits beyond the graph order");
    }
    if ((rows[v] >> v) & 1U) throw std::invalid_argument("self-loop in rows");
  }
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (((rows[u] >> v) & 1U) != ((rows[v] >> u) & 1U)) {
        throw std::invalid_argument("rows are not symmetric");
      }
    }
  }
  g.adj_.assign(rows.begin(), rows.end());
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (auto row : adj_) twice += std::popcount(row);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u) {
    for (int v = u + 1; v < order(); ++v) {
      if (has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

std::uint64_t Graph::vertex_mask() const {
  return order() == 64 ? ~std::uint64_t{0} : (bit(order()) - 1);
}

Graph Graph::relabeled(std::span<const int> perm) const {
  const int n = order();
  if (static_cast<int>(perm.size()) != n) {
    throw std::invalid_argument("permutation size does not match graph order");
  }
  std::uint64_t seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= n || ((seen >> p) & 1U)) {
      throw std::invalid_argument("not a permutation");
    }
    seen |= bit(p);
  }
  Graph out(n);
  for (int u = 0; u < n; ++u) {
    std::uint64_t row = adj_[u];
    std::uint64_t mapped = 0;
    while (row) {
      int v = std::countr_zero(row);
      row &= row - 1;
      mapped |= bit(perm[v]);
    }
    out.adj_[perm[u]] = mapped;
  }
  return out;
}

Graph Graph::induced(std::uint64_t keep) const {
  keep &= vertex_mask();
  std::vector<int> index(order(), -1);
  int m = 0;
  for (int v = 0; v < order(); ++v) {
    if ((keep >> v) & 1U) index[v] = m++;
  }
  Graph out(m);
  for (int u = 0; u < order(); ++u) {
    if (index[u] < 0) continue;
    std::uint64_t row = adj_[u] & keep;
    while (row) {
      int v = std::countr_zero(row);
      row &= row - 1;
      out.adj_[index[u]] |= bit(index[v]);
    }
  }
  return out;
}

Graph edge_add(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) throw std::invalid_argument("edge_add: u == v");
  if (g.has_edge(u, v)) throw std::invalid_argument("edge_add: edge exists");
  Graph out = g;
  out.adj_[u] |= bit(v);
  out.adj_[v] |= bit(u);
  return out;
}

Graph edge_delete(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v || !g.has_edge(u, v)) {
    throw std::invalid_argument("edge_delete: edge absent");
  }
  Graph out = g;
  out.adj_[u] &= ~bit(v);
  out.adj_[v] &= ~bit(u);
  return out;
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> degrees(g.order());
  for (int v = 0; v < g.order(); ++v) degrees[v] = g.degree(v);
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  return degrees;
}

std::uint64_t reachable(const Graph& g, Vertex from, std::uint64_t within) {
  std::uint64_t seen = bit(from) & within;
  std::uint64_t frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= g.neighbors(v);
    }
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

Components connected_components(const Graph& g) {
  Components out;
  out.component.assign(g.order(), -1);
  std::uint64_t left = g.vertex_mask();
  while (left) {
    int v = std::countr_zero(left);
    std::uint64_t comp = reachable(g, v, left);
    left &= ~comp;
    for (std::uint64_t c = comp; c; c &= c - 1) {
      out.component[std::countr_zero(c)] = out.count;
    }
    out.members.push_back(comp);
    ++out.count;
  }
  return out;
}

bool is_connected(const Graph& g) {
  return reachable(g, 0, g.vertex_mask()) == g.vertex_mask();
}

std::uint64_t cut_vertices(const Graph& g) {
  const std::uint64_t all = g.vertex_mask();
  std::uint64_t cuts = 0;
  if (g.order() < 3) return 0;
  for (int v = 0; v < g.order(); ++v) {
    std::uint64_t rest = all & ~bit(v);
    int start = std::countr_zero(rest);
    if (reachable(g, start, rest) != rest) cuts |= bit(v);
  }
  return cuts;
}

}  // namespace mzi
