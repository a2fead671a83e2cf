#include "mzi/enumeration.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "mzi/graph6.hpp"
#include "parallel.hpp"

namespace mzi {

namespace {

struct Child {
  CanonicalCode code;
  Graph graph;
};

// Children of one parent that pass the canonical-deletion test. The deleted
// vertex is the non-cut vertex with the largest canonical position; a child
// is kept iff the added vertex lies in its automorphism orbit.
std::vector<Child> augment(const Graph& parent, bool leaves_only) {
  const int m = parent.order();
  std::vector<Child> out;
  std::unordered_set<CanonicalCode> seen;

  auto try_neighbourhood = [&](std::uint64_t nbrs) {
    std::vector<std::uint64_t> rows(parent.rows().begin(), parent.rows().end());
    rows.push_back(nbrs);
    for (std::uint64_t r = nbrs; r; r &= r - 1) rows[std::countr_zero(r)] |= bit(m);
    Graph child = Graph::from_rows(rows);

    CanonicalLabeling lab = canonical_labeling(child);
    const std::uint64_t removable = child.vertex_mask() & ~cut_vertices(child);
    int chosen = -1;
    for (std::uint64_t r = removable; r; r &= r - 1) {
      int v = std::countr_zero(r);
      if (chosen < 0 || lab.label[v] > lab.label[chosen]) chosen = v;
    }
    if (lab.orbit[chosen] != lab.orbit[m]) return;
    CanonicalCode code{to_graph6(lab.canonical)};
    if (!seen.insert(code).second) return;
    out.push_back({std::move(code), std::move(lab.canonical)});
  };

  if (leaves_only) {
    for (int v = 0; v < m; ++v) try_neighbourhood(bit(v));
  } else {
    const std::uint64_t limit = std::uint64_t{1} << m;
    for (std::uint64_t s = 1; s < limit; ++s) try_neighbourhood(s);
  }
  return out;
}

std::vector<Child> next_level(const std::vector<Graph>& parents, bool leaves_only,
                              int jobs) {
  std::vector<std::vector<Child>> partial(parents.size());
  detail::parallel_for(parents.size(), jobs, [&](std::size_t i) {
    partial[i] = augment(parents[i], leaves_only);
  });
  std::vector<Child> all;
  for (auto& part : partial) {
    for (auto& c : part) all.push_back(std::move(c));
  }
  std::sort(all.begin(), all.end(),
            [](const Child& a, const Child& b) { return a.code < b.code; });
  return all;
}

}  // namespace

namespace detail {

std::vector<Graph> generate(int n, bool trees, int jobs) {
  std::vector<Graph> level{Graph(1)};
  for (int m = 1; m < n; ++m) {
    auto children = next_level(level, trees, jobs);
    level.clear();
    for (auto& c : children) level.push_back(std::move(c.graph));
  }
  return level;
}

}  // namespace detail

namespace {

std::mutex& cache_mutex() {
  static std::mutex mu;
  return mu;
}

}  // namespace

std::vector<Graph> enumerate_connected(int n, int jobs) {
  if (n < 1 || n > kMaxConnectedOrder) {
    throw std::invalid_argument("enumerate_connected supports 1 <= n <= " +
                                std::to_string(kMaxConnectedOrder));
  }
  static std::map<int, std::vector<Graph>> cache;
  std::lock_guard lock(cache_mutex());
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, detail::generate(n, false, jobs)).first;
  return it->second;
}

std::vector<Graph> enumerate_trees(int n, int jobs) {
  if (n < 1 || n > kMaxTreeOrder) {
    throw std::invalid_argument("enumerate_trees supports 1 <= n <= " +
                                std::to_string(kMaxTreeOrder));
  }
  static std::map<int, std::vector<Graph>> cache;
  std::lock_guard lock(cache_mutex());
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, detail::generate(n, true, jobs)).first;
  return it->second;
}

std::vector<Graph> enumerate_class(const ClassConstraint& c, int jobs) {
  c.validate();
  auto cat = catalog(c.n, jobs);
  std::vector<Graph> out;
  for (std::size_t i = 0; i < cat->entries().size(); ++i) {
    if (cat->contains(i, c)) out.push_back(cat->entries()[i].graph);
  }
  return out;
}

Catalog::Catalog(int n, int jobs) : n_(n), jobs_(jobs) {
  for (auto& g : enumerate_connected(n, jobs)) {
    Entry e{g, CanonicalCode{to_graph6(g)}, pi1_exact(g), pi2_exact(g),
            pendant_count(g)};
    entries_.push_back(std::move(e));
  }
}

const std::vector<int>& Catalog::kappa() const {
  std::call_once(kappa_once_, [this] {
    const std::size_t count = entries_.size();
    kappa_.assign(count, 0);
    kappa_edge_.assign(count, 0);
    if (n_ < 2) return;
    detail::parallel_for(count, jobs_, [&](std::size_t i) {
      kappa_[i] = vertex_connectivity(entries_[i].graph);
      kappa_edge_[i] = edge_connectivity(entries_[i].graph);
    });
  });
  return kappa_;
}

const std::vector<int>& Catalog::kappa_edge() const {
  kappa();
  return kappa_edge_;
}

bool Catalog::contains(std::size_t i, const ClassConstraint& c) const {
  if (c.n != n_ || n_ < 2) return false;
  switch (c.kind) {
    case ClassKind::kVertexConnectivity: return kappa()[i] <= c.bound;
    case ClassKind::kEdgeConnectivity: return kappa_edge()[i] <= c.bound;
    case ClassKind::kPendants: return entries_[i].pendants == c.bound;
  }
  return false;
}

std::shared_ptr<const Catalog> catalog(int n, int jobs) {
  if (n < 1 || n > kMaxConnectedOrder) {
    throw std::invalid_argument("catalog supports 1 <= n <= " +
                                std::to_string(kMaxConnectedOrder));
  }
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const Catalog>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, std::make_shared<const Catalog>(n, jobs)).first;
  }
  return it->second;
}

const char* direction_name(Direction d) {
  return d == Direction::kMax ? "max" : "min";
}

ExtremalReport extremal_search(const ClassConstraint& c, Index index,
                               Direction direction, int jobs) {
  c.validate();
  if (c.n < 2 || c.n > kMaxConnectedOrder) {
    throw std::invalid_argument("extremal_search supports 2 <= n <= " +
                                std::to_string(kMaxConnectedOrder));
  }
  auto cat = catalog(c.n, jobs);
  ExtremalReport report{c, index, direction, 0, {}, 0};
  for (std::size_t i = 0; i < cat->entries().size(); ++i) {
    if (!cat->contains(i, c)) continue;
    const auto& e = cat->entries()[i];
    const BigPositive& v = index == Index::kPi1 ? e.pi1 : e.pi2;
    const bool first = report.class_size == 0;
    ++report.class_size;
    const bool better = direction == Direction::kMax ? v > report.value
                                                     : v < report.value;
    if (first || better) {
      report.value = v;
      report.witnesses.assign(1, e.code);
    } else if (v == report.value) {
      report.witnesses.push_back(e.code);
    }
  }
  if (report.class_size == 0) {
    throw std::invalid_argument("class " + c.describe() + " is empty");
  }
  std::sort(report.witnesses.begin(), report.witnesses.end());
  return report;
}

}  // namespace mzi
