#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <vector>

#include "mzi/canonical.hpp"
#include "mzi/connectivity.hpp"
#include "mzi/graph.hpp"
#include "mzi/indices.hpp"

namespace mzi {

inline constexpr int kMaxConnectedOrder = 9;
inline constexpr int kMaxTreeOrder = 12;

// One canonical representative per isomorphism class of connected graphs on
// n vertices, generated by canonical augmentation and sorted by canonical
// code. Output is identical for every `jobs` value. Results are cached per n.
// Throws std::invalid_argument unless 1 <= n <= kMaxConnectedOrder.
std::vector<Graph> enumerate_connected(int n, int jobs = 1);

// Trees on n vertices, same conventions; 1 <= n <= kMaxTreeOrder.
std::vector<Graph> enumerate_trees(int n, int jobs = 1);

namespace detail {
// Uncached generation behind enumerate_connected / enumerate_trees.
std::vector<Graph> generate(int n, bool trees, int jobs);
}  // namespace detail

// Connected graphs of order c.n belonging to the class.
std::vector<Graph> enumerate_class(const ClassConstraint& c, int jobs = 1);

// Precomputed invariants of every connected graph of one order. Connectivity
// values are filled on first use.
class Catalog {
 public:
  struct Entry {
    Graph graph;
    CanonicalCode code;
    BigPositive pi1;
    BigPositive pi2;
    int pendants = 0;
  };

  Catalog(int n, int jobs);

  int order() const { return n_; }
  const std::vector<Entry>& entries() const { return entries_; }
  const std::vector<int>& kappa() const;
  const std::vector<int>& kappa_edge() const;

  bool contains(std::size_t i, const ClassConstraint& c) const;

 private:
  int n_;
  int jobs_;
  std::vector<Entry> entries_;
  mutable std::once_flag kappa_once_;
  mutable std::vector<int> kappa_;
  mutable std::vector<int> kappa_edge_;
};

std::shared_ptr<const Catalog> catalog(int n, int jobs = 1);

enum class Direction { kMax, kMin };
const char* direction_name(Direction d);

struct ExtremalReport {
  ClassConstraint constraint;
  Index index = Index::kPi1;
  Direction direction = Direction::kMax;
  BigPositive value;
  // Sorted canonical codes of every class member attaining `value`.
  std::vector<CanonicalCode> witnesses;
  std::size_t class_size = 0;
};

// Throws std::invalid_argument on an invalid constraint, an order outside
// 2..kMaxConnectedOrder, or an empty class.
ExtremalReport extremal_search(const ClassConstraint& c, Index index,
                               Direction direction, int jobs = 1);

}  // namespace mzi
