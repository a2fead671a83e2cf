#pragma once

#include <string>

#include "mzi/graph.hpp"

namespace mzi {

// Both throw std::invalid_argument for n < 2 or a disconnected graph.
// kappa(K_n) = n-1; kappa(K_2) = 1.
int vertex_connectivity(const Graph& g);
int edge_connectivity(const Graph& g);

int pendant_count(const Graph& g);
std::uint64_t pendant_vertices(const Graph& g);

enum class ClassKind {
  kVertexConnectivity,  // kappa(G) <= bound
  kEdgeConnectivity,    // kappa'(G) <= bound
  kPendants,            // exactly `bound` pendant vertices
};

// Connected graphs of order n restricted by `kind`.
struct ClassConstraint {
  int n = 0;
  ClassKind kind = ClassKind::kVertexConnectivity;
  int bound = 0;

  static ClassConstraint vertex(int n, int k) {
    return {n, ClassKind::kVertexConnectivity, k};
  }
  static ClassConstraint edge(int n, int k) {
    return {n, ClassKind::kEdgeConnectivity, k};
  }
  static ClassConstraint pendants(int n, int p) {
    return {n, ClassKind::kPendants, p};
  }

  // Throws std::invalid_argument when out of range: 1 <= k <= n-1 for the
  // connectivity kinds, 2 <= p <= n-1 for pendants.
  void validate() const;
  std::string describe() const;

  friend bool operator==(const ClassConstraint&, const ClassConstraint&) = default;
};

const char* class_kind_name(ClassKind kind);

bool in_class(const Graph& g, const ClassConstraint& c);

}  // namespace mzi
