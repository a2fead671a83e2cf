#pragma once

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "mzi/graph.hpp"

namespace mzi {

// graph6 text of the canonically relabeled graph. Equal codes <=> isomorphic
// graphs.
struct CanonicalCode {
  std::string bytes;

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

struct CanonicalLabeling {
  // label[v] is the position of v in the canonical order.
  std::vector<int> label;
  Graph canonical;
  // Generators of the automorphism group (of the coloured graph when colours
  // were supplied). perm[v] is the image of v.
  std::vector<std::vector<int>> generators;
  // orbit[v] is the smallest vertex in the automorphism orbit of v.
  std::vector<int> orbit;
};

// Individualisation-refinement search. `colors`, when non-empty, gives one
// value per vertex; only colour-preserving relabelings are considered and
// colour classes keep their relative order.
CanonicalLabeling canonical_labeling(const Graph& g,
                                     std::span<const int> colors = {});

CanonicalCode canonical_form(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace mzi

template <>
struct std::hash<mzi::CanonicalCode> {
  std::size_t operator()(const mzi::CanonicalCode& c) const noexcept {
    return std::hash<std::string>{}(c.bytes);
  }
};
