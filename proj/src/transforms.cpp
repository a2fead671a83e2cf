#include "mzi/transforms.hpp"

#include <stdexcept>
#include <string>

namespace mzi {

namespace {

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

void require_vertex(const Graph& g, Vertex v) {
  require(v >= 0 && v < g.order(), "vertex out of range");
}

std::vector<Vertex> members(std::uint64_t mask) {
  std::vector<Vertex> out;
  for (; mask; mask &= mask - 1) out.push_back(std::countr_zero(mask));
  return out;
}

Graph move_edges(Graph g, Vertex from, Vertex to, std::uint64_t ends) {
  for (Vertex w : members(ends)) {
    g = edge_delete(g, from, w);
    g = edge_add(g, to, w);
  }
  return g;
}

// Neighbour of v whose branch contains `other`.
Vertex toward(const Graph& tree, Vertex v, Vertex other) {
  const std::uint64_t rest = tree.vertex_mask() & ~bit(v);
  for (Vertex w : members(tree.neighbors(v))) {
    if ((reachable(tree, w, rest) >> other) & 1U) return w;
  }
  throw std::invalid_argument("vertices are not connected");
}

TransformStep make_step(TransformKind kind, const Graph& before, Graph after,
                        Vertex source, Vertex target, std::vector<Vertex> moved) {
  TransformStep s{kind,          source,           target,
                  std::move(moved), before,        std::move(after),
                  pi1_exact(before), 0,            pi2_exact(before),
                  0,             {}};
  s.pi1_after = pi1_exact(s.after);
  s.pi2_after = pi2_exact(s.after);
  return s;
}

}  // namespace

bool is_tree(const Graph& g) {
  return is_connected(g) && g.edge_count() == g.order() - 1;
}

const char* transform_name(TransformKind kind) {
  switch (kind) {
    case TransformKind::kEdgeAdd: return "edge_add";
    case TransformKind::kNeighborTransfer: return "neighbor_transfer";
    case TransformKind::kBranchTransferAll: return "branch_transfer_all";
    case TransformKind::kBranchMoveOne: return "branch_move_one";
    case TransformKind::kPendantMove: return "pendant_move";
  }
  return "?";
}

Graph neighbor_transfer(const Graph& g, Vertex u, Vertex v, std::uint64_t moved) {
  require_vertex(g, u);
  require_vertex(g, v);
  require(u != v, "neighbor_transfer: u == v");
  require(!g.has_edge(u, v), "neighbor_transfer: u and v are adjacent");
  require(moved != 0, "neighbor_transfer: empty transfer set");
  require(((moved >> u) & 1U) == 0, "neighbor_transfer: u in transfer set");
  require((moved & ~(g.neighbors(v) & ~g.neighbors(u))) == 0,
          "neighbor_transfer: set not inside N(v) \\ N(u)");
  return move_edges(g, v, u, moved);
}

Graph branch_transfer_all(const Graph& tree, Vertex v2, Vertex v1,
                          std::optional<Vertex> keep) {
  require(is_tree(tree), "branch_transfer_all: input is not a tree");
  require_vertex(tree, v1);
  require_vertex(tree, v2);
  require(v1 != v2, "branch_transfer_all: v1 == v2");
  const Vertex path_side = toward(tree, v2, v1);
  std::uint64_t others = tree.neighbors(v2) & ~bit(path_side);
  require(others != 0, "branch_transfer_all: v2 has no transferable branch");
  Vertex kept = keep.value_or(std::countr_zero(others));
  require(((others >> kept) & 1U) != 0,
          "branch_transfer_all: kept vertex is not an off-path neighbour of v2");
  const std::uint64_t moving = others & ~bit(kept);
  require(moving != 0, "branch_transfer_all: v2 has no transferable branch");
  return move_edges(tree, v2, v1, moving);
}

Graph branch_move_one(const Graph& tree, Vertex v2, Vertex v1) {
  require(is_tree(tree), "branch_move_one: input is not a tree");
  require_vertex(tree, v1);
  require_vertex(tree, v2);
  require(v1 != v2, "branch_move_one: v1 == v2");
  const std::uint64_t free = tree.neighbors(v2) & ~bit(toward(tree, v2, v1));
  require(free != 0, "branch_move_one: no branch at v2 to move");
  return move_edges(tree, v2, v1, bit(std::countr_zero(free)));
}

Graph pendant_move(const Graph& g, Vertex from, Vertex to) {
  require_vertex(g, from);
  require_vertex(g, to);
  require(from != to, "pendant_move: from == to");
  std::uint64_t pendants = 0;
  for (Vertex w : members(g.neighbors(from))) {
    if (g.degree(w) == 1 && w != to) pendants |= bit(w);
  }
  require(pendants != 0, "pendant_move: no pendant vertex at source");
  return move_edges(g, from, to, bit(std::countr_zero(pendants)));
}

bool TransformStep::changed(Index index, Change change) const {
  const BigPositive& b = index == Index::kPi1 ? pi1_before : pi2_before;
  const BigPositive& a = index == Index::kPi1 ? pi1_after : pi2_after;
  return change == Change::kIncrease ? a > b : a < b;
}

bool TransformStep::contracts_hold() const {
  for (const auto& c : contracts) {
    if (!changed(c.index, c.change)) return false;
  }
  return true;
}

TransformStep edge_add_step(const Graph& g, Vertex u, Vertex v) {
  auto s = make_step(TransformKind::kEdgeAdd, g, edge_add(g, u, v), u, v, {});
  bool isolated = false;
  for (int x = 0; x < g.order(); ++x) isolated |= g.degree(x) == 0;
  if (!isolated) {
    s.contracts = {{Index::kPi1, Change::kIncrease}, {Index::kPi2, Change::kIncrease}};
  }
  return s;
}

TransformStep neighbor_transfer_step(const Graph& g, Vertex u, Vertex v,
                                     std::uint64_t moved) {
  auto s = make_step(TransformKind::kNeighborTransfer, g,
                     neighbor_transfer(g, u, v, moved), v, u, members(moved));
  if (g.degree(u) >= g.degree(v)) s.contracts = {{Index::kPi2, Change::kIncrease}};
  return s;
}

TransformStep branch_transfer_all_step(const Graph& tree, Vertex v2, Vertex v1,
                                       std::optional<Vertex> keep) {
  Graph after = branch_transfer_all(tree, v2, v1, keep);
  const std::uint64_t moved = after.neighbors(v1) & ~tree.neighbors(v1);
  auto s = make_step(TransformKind::kBranchTransferAll, tree, std::move(after), v2,
                     v1, members(moved));
  if (tree.degree(v1) >= 3 && tree.degree(v2) >= 3) {
    s.contracts = {{Index::kPi1, Change::kDecrease}};
  }
  return s;
}

TransformStep branch_move_one_step(const Graph& tree, Vertex v2, Vertex v1) {
  Graph after = branch_move_one(tree, v2, v1);
  const std::uint64_t moved = after.neighbors(v1) & ~tree.neighbors(v1);
  auto s = make_step(TransformKind::kBranchMoveOne, tree, std::move(after), v2, v1,
                     members(moved));
  if (tree.degree(v2) - tree.degree(v1) >= 2) {
    s.contracts = {{Index::kPi2, Change::kDecrease}};
  }
  return s;
}

TransformStep pendant_move_step(const Graph& g, Vertex from, Vertex to) {
  Graph after = pendant_move(g, from, to);
  const std::uint64_t moved = after.neighbors(to) & ~g.neighbors(to);
  auto s = make_step(TransformKind::kPendantMove, g, std::move(after), from, to,
                     members(moved));
  if (g.degree(from) - g.degree(to) >= 2) {
    s.contracts.push_back({Index::kPi1, Change::kIncrease});
  }
  if (g.degree(to) >= g.degree(from)) {
    s.contracts.push_back({Index::kPi2, Change::kIncrease});
  }
  return s;
}

}  // namespace mzi
