#include "mzi/canonical.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <map>
#include <numeric>
#include <stdexcept>

#include "mzi/graph6.hpp"

namespace mzi {

namespace {

// Ordered partition of the vertex set, one bitmask per cell.
using Cells = std::vector<std::uint64_t>;

// Split cells by neighbour counts into each splitter cell until the
// partition is equitable. Pieces are ordered by ascending count, so the
// result depends only on the isomorphism type of (graph, partition).
void refine(const Graph& g, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      const std::uint64_t splitter = cells[s];
      for (std::size_t i = 0; i < cells.size(); ++i) {
        const std::uint64_t cell = cells[i];
        if (std::popcount(cell) < 2) continue;
        std::array<std::uint64_t, 65> by_count{};
        int distinct = 0;
        for (std::uint64_t c = cell; c; c &= c - 1) {
          int v = std::countr_zero(c);
          int k = std::popcount(g.neighbors(v) & splitter);
          if (by_count[k] == 0) ++distinct;
          by_count[k] |= bit(v);
        }
        if (distinct < 2) continue;
        Cells pieces;
        for (auto piece : by_count) {
          if (piece) pieces.push_back(piece);
        }
        cells.erase(cells.begin() + static_cast<long>(i));
        cells.insert(cells.begin() + static_cast<long>(i), pieces.begin(),
                     pieces.end());
        changed = true;
        break;
      }
    }
  }
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent_[a] = b;
  }

 private:
  std::vector<int> parent_;
};

struct Leaf {
  std::vector<int> order;  // position -> vertex
  std::vector<std::uint64_t> rows;
  std::vector<int> path;
};

class Search {
 public:
  explicit Search(const Graph& g) : g_(g), n_(g.order()) {}

  void run(Cells cells) {
    refine(g_, cells);
    dfs(cells, 0);
  }

  const Leaf& best() const { return best_; }
  const std::vector<std::vector<int>>& automorphisms() const { return autos_; }

 private:
  static constexpr int kNoJump = INT_MAX;

  int dfs(const Cells& cells, int depth) {
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (std::popcount(cells[i]) > 1) {
        target = i;
        break;
      }
    }
    if (target == cells.size()) return leaf(cells);

    const std::uint64_t cell = cells[target];
    std::uint64_t explored = 0;
    for (std::uint64_t c = cell; c; c &= c - 1) {
      const int v = std::countr_zero(c);
      if (explored && equivalent_to_explored(v, explored, depth)) continue;
      explored |= bit(v);

      Cells child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(),
                   cells.begin() + static_cast<long>(target));
      child.push_back(bit(v));
      child.push_back(cell & ~bit(v));
      child.insert(child.end(), cells.begin() + static_cast<long>(target) + 1,
                   cells.end());
      refine(g_, child);

      path_.push_back(v);
      const int resume = dfs(child, depth + 1);
      path_.pop_back();
      if (resume < depth) return resume;
    }
    return kNoJump;
  }

  // v is in the same orbit as an explored sibling under the automorphisms
  // found so far that fix the current path pointwise.
  bool equivalent_to_explored(int v, std::uint64_t explored, int depth) {
    UnionFind uf(n_);
    bool any = false;
    for (const auto& a : autos_) {
      bool fixes = true;
      for (int i = 0; i < depth && fixes; ++i) fixes = a[path_[i]] == path_[i];
      if (!fixes) continue;
      any = true;
      for (int x = 0; x < n_; ++x) uf.unite(x, a[x]);
    }
    if (!any) return false;
    const int root = uf.find(v);
    for (std::uint64_t e = explored; e; e &= e - 1) {
      if (uf.find(std::countr_zero(e)) == root) return true;
    }
    return false;
  }

  int leaf(const Cells& cells) {
    Leaf here;
    here.order.resize(n_);
    std::vector<int> pos(n_);
    for (int i = 0; i < n_; ++i) {
      here.order[i] = std::countr_zero(cells[i]);
      pos[here.order[i]] = i;
    }
    here.rows.assign(n_, 0);
    for (int u = 0; u < n_; ++u) {
      std::uint64_t mapped = 0;
      for (std::uint64_t r = g_.neighbors(u); r; r &= r - 1) {
        mapped |= bit(pos[std::countr_zero(r)]);
      }
      here.rows[pos[u]] = mapped;
    }
    here.path = path_;

    if (!have_first_) {
      have_first_ = true;
      first_ = here;
      best_ = std::move(here);
      return kNoJump;
    }
    if (here.rows == first_.rows) {
      record_automorphism(first_, here);
      return common_prefix(first_.path, here.path);
    }
    if (here.rows == best_.rows) {
      record_automorphism(best_, here);
      return common_prefix(best_.path, here.path);
    }
    if (here.rows > best_.rows) best_ = std::move(here);
    return kNoJump;
  }

  void record_automorphism(const Leaf& from, const Leaf& to) {
    std::vector<int> perm(n_);
    for (int i = 0; i < n_; ++i) perm[from.order[i]] = to.order[i];
    autos_.push_back(std::move(perm));
  }

  static int common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    int k = 0;
    while (k < static_cast<int>(a.size()) && k < static_cast<int>(b.size()) &&
           a[k] == b[k]) {
      ++k;
    }
    return k;
  }

  const Graph& g_;
  const int n_;
  std::vector<int> path_;
  bool have_first_ = false;
  Leaf first_;
  Leaf best_;
  std::vector<std::vector<int>> autos_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g,
                                     std::span<const int> colors) {
  const int n = g.order();
  Cells cells;
  if (colors.empty()) {
    cells.push_back(g.vertex_mask());
  } else {
    if (static_cast<int>(colors.size()) != n) {
      throw std::invalid_argument("one colour per vertex required");
    }
    std::map<int, std::uint64_t> classes;
    for (int v = 0; v < n; ++v) classes[colors[v]] |= bit(v);
    for (const auto& [color, members] : classes) cells.push_back(members);
  }

  Search search(g);
  search.run(std::move(cells));

  std::vector<int> label(n);
  for (int i = 0; i < n; ++i) label[search.best().order[i]] = i;

  UnionFind uf(n);
  for (const auto& a : search.automorphisms()) {
    for (int x = 0; x < n; ++x) uf.unite(x, a[x]);
  }
  std::vector<int> orbit(n);
  for (int v = 0; v < n; ++v) orbit[v] = uf.find(v);

  return CanonicalLabeling{label, Graph::from_rows(search.best().rows),
                           search.automorphisms(), std::move(orbit)};
}

CanonicalCode canonical_form(const Graph& g) {
  return CanonicalCode{to_graph6(canonical_labeling(g).canonical)};
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace mzi
