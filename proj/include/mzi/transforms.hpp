#pragma once

#include <optional>
#include <vector>

#include "mzi/graph.hpp"
#include "mzi/indices.hpp"

namespace mzi {

// Moves the edges v-s (s in `moved`) to u-s. Requires u != v, uv not an
// edge, `moved` non-empty and contained in N(v) \ N(u).
Graph neighbor_transfer(const Graph& g, Vertex u, Vertex v, std::uint64_t moved);

// Tree surgery: every branch of v2 except the one containing v1 and the one
// rooted at `keep` is reattached to v1, leaving v2 with degree 2. `keep`
// defaults to the smallest neighbour of v2 not on the v2-v1 path.
Graph branch_transfer_all(const Graph& tree, Vertex v2, Vertex v1,
                          std::optional<Vertex> keep = std::nullopt);

// Tree surgery: the branch of v2 with the smallest attachment vertex among
// those not containing v1 is reattached to v1.
Graph branch_move_one(const Graph& tree, Vertex v2, Vertex v1);

// Reattaches the smallest pendant neighbour of `from` (other than `to`) to
// `to`.
Graph pendant_move(const Graph& g, Vertex from, Vertex to);

enum class TransformKind {
  kEdgeAdd,
  kNeighborTransfer,
  kBranchTransferAll,
  kBranchMoveOne,
  kPendantMove,
};

const char* transform_name(TransformKind kind);

enum class Change { kIncrease, kDecrease };

// Strict monotonicity promised for one index once the degree hypothesis of
// the transform holds.
struct Contract {
  Index index;
  Change change;
};

struct TransformStep {
  TransformKind kind;
  Vertex source = -1;
  Vertex target = -1;
  std::vector<Vertex> moved;
  Graph before;
  Graph after;
  BigPositive pi1_before, pi1_after, pi2_before, pi2_after;
  // Contracts whose hypothesis holds for this instance.
  std::vector<Contract> contracts;

  bool contracts_hold() const;
  bool changed(Index index, Change change) const;
};

// Each *_step applies the transform and records exact before/after values.
//   edge_add:             both indices increase when g has no isolated vertex
//   neighbor_transfer:    pi2 increases when d(u) >= d(v)
//   branch_transfer_all:  pi1 decreases when d(v1) >= 3 and d(v2) >= 3
//   branch_move_one:      pi2 decreases when d(v2) - d(v1) >= 2
//   pendant_move:         pi1 increases when d(from) - d(to) >= 2;
//                         pi2 increases when d(to) >= d(from)
TransformStep edge_add_step(const Graph& g, Vertex u, Vertex v);
TransformStep neighbor_transfer_step(const Graph& g, Vertex u, Vertex v,
                                     std::uint64_t moved);
TransformStep branch_transfer_all_step(const Graph& tree, Vertex v2, Vertex v1,
                                       std::optional<Vertex> keep = std::nullopt);
TransformStep branch_move_one_step(const Graph& tree, Vertex v2, Vertex v1);
TransformStep pendant_move_step(const Graph& g, Vertex from, Vertex to);

bool is_tree(const Graph& g);

}  // namespace mzi
