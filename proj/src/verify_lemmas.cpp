#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "mzi/canonical.hpp"
#include "mzi/constructions.hpp"
#include "mzi/enumeration.hpp"
#include "mzi/graph6.hpp"
#include "mzi/transforms.hpp"
#include "mzi/verify.hpp"
#include "parallel.hpp"

namespace mzi {

namespace {

// Accumulates hypothesis instances for one (lemma, n) report and keeps the
// first failure.
class Tally {
 public:
  Tally(std::string suite, int n) {
    report_.suite = std::move(suite);
    report_.params.n = n;
    report_.expected_source = "exhaustive";
  }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++report_.instances;
    if (ok) return;
    ++failures_;
    if (report_.status != Status::kCounterexample) {
      report_.status = Status::kCounterexample;
      report_.details = describe();
    }
  }

  void note(std::string finding) { report_.findings.push_back(std::move(finding)); }

  VerificationReport finish() {
    if (report_.instances == 0) {
      report_.status = Status::kSkipped;
      report_.details = "no instance satisfies the hypothesis at this order";
    }
    report_.observed["instances"] = std::to_string(report_.instances);
    report_.observed["counterexamples"] = std::to_string(failures_);
    report_.expected["counterexamples"] = "0";
    return std::move(report_);
  }

 private:
  VerificationReport report_;
  std::uint64_t failures_ = 0;
};

std::string describe_step(const TransformStep& s) {
  std::string moved;
  for (Vertex v : s.moved) moved += (moved.empty() ? "" : ",") + std::to_string(v);
  return std::string(transform_name(s.kind)) + " on " + to_graph6(s.before) +
         " source=" + std::to_string(s.source) + " target=" + std::to_string(s.target) +
         " moved={" + moved + "} pi1 " + s.pi1_before.str() + "->" +
         s.pi1_after.str() + " pi2 " + s.pi2_before.str() + "->" + s.pi2_after.str();
}

std::vector<Vertex> members(std::uint64_t mask) {
  std::vector<Vertex> out;
  for (; mask; mask &= mask - 1) out.push_back(std::countr_zero(mask));
  return out;
}

// Every graph on k vertices up to isomorphism, connected or not.
std::vector<Graph> all_graphs(int k) {
  std::vector<Edge> slots;
  for (int u = 0; u < k; ++u) {
    for (int v = u + 1; v < k; ++v) slots.emplace_back(u, v);
  }
  std::set<CanonicalCode> seen;
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if ((mask >> i) & 1U) edges.push_back(slots[i]);
    }
    Graph g = Graph::from_edges(k, edges);
    if (seen.insert(canonical_form(g)).second) out.push_back(g);
  }
  return out;
}

VerificationReport lemma_tree_extremes(int n) {
  Tally tally("tree_extremes", n);
  const Graph p = path(n);
  const Graph s = star(n);
  const auto path_code = canonical_form(p);
  const auto star_code = canonical_form(s);
  const BigPositive star_pi1 = pi1_exact(s);
  const BigPositive path_pi2 = pi2_exact(p);
  for (const auto& t : enumerate_trees(n)) {
    const auto code = canonical_form(t);
    if (code == path_code || code == star_code) continue;
    tally.check(pi1_exact(t) > star_pi1 && pi2_exact(t) > path_pi2,
                [&] { return "tree " + to_graph6(t); });
  }
  return tally.finish();
}

VerificationReport lemma_edge_addition(int n) {
  Tally tally("edge_addition", n);
  for (const auto& g : enumerate_connected(n)) {
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (g.has_edge(u, v)) continue;
        const auto step = edge_add_step(g, u, v);
        tally.check(!step.contracts.empty() && step.contracts_hold(),
                    [&] { return describe_step(step); });
      }
    }
  }
  return tally.finish();
}

VerificationReport edge_deletion(int n) {
  Tally tally("edge_deletion", n);
  auto cat = catalog(n);
  const auto& kappa = cat->kappa();
  const auto& kappa_edge = cat->kappa_edge();
  for (std::size_t i = 0; i < cat->entries().size(); ++i) {
    const auto& e = cat->entries()[i];
    for (auto [u, v] : e.graph.edges()) {
      const Graph h = edge_delete(e.graph, u, v);
      if (!is_connected(h)) continue;
      const bool ok = pi1_exact(h) < e.pi1 && pi2_exact(h) < e.pi2 &&
                      vertex_connectivity(h) <= kappa[i] &&
                      edge_connectivity(h) <= kappa_edge[i];
      tally.check(ok, [&] {
        return "deleting " + std::to_string(u) + "-" + std::to_string(v) + " from " +
               e.code.bytes;
      });
    }
  }
  return tally.finish();
}

VerificationReport lemma_neighbor_transfer(int n) {
  Tally tally("neighbor_transfer", n);
  for (const auto& g : enumerate_connected(n)) {
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u == v || g.has_edge(u, v) || g.degree(u) < g.degree(v)) continue;
        const std::uint64_t avail = g.neighbors(v) & ~g.neighbors(u);
        // Non-empty subsets of avail.
        for (std::uint64_t s = avail; s; s = (s - 1) & avail) {
          const auto step = neighbor_transfer_step(g, u, v, s);
          tally.check(!step.contracts.empty() && step.contracts_hold(),
                      [&] { return describe_step(step); });
        }
      }
    }
  }
  return tally.finish();
}

VerificationReport lemma_sandwich(int n, Index index) {
  Tally tally(index == Index::kPi1 ? "sandwich_pi1" : "sandwich_pi2", n);
  for (int k = 1; k <= 3; ++k) {
    for (const auto& h : all_graphs(k)) {
      for (int j = 2; 2 * j <= n - k; ++j) {
        const Graph spread = sandwich(j, h, n - k - j);
        const Graph lopsided = sandwich(1, h, n - k - 1);
        const auto a = index_value(spread, index);
        const auto b = index_value(lopsided, index);
        tally.check(a < b, [&] {
          return "H=" + to_graph6(h) + " j=" + std::to_string(j) + ": " + a.str() +
                 " vs " + b.str();
        });
      }
    }
  }
  return tally.finish();
}

// Neighbour of v2 on the path towards v1.
Vertex path_neighbor(const Graph& t, Vertex v2, Vertex v1) {
  const std::uint64_t rest = t.vertex_mask() & ~bit(v2);
  for (Vertex w : members(t.neighbors(v2))) {
    if ((reachable(t, w, rest) >> v1) & 1U) return w;
  }
  return -1;
}

VerificationReport lemma_branch_transfer(int n) {
  Tally tally("branch_transfer", n);
  std::uint64_t reversed = 0;
  for (const auto& t : enumerate_trees(n)) {
    const int leaves = pendant_count(t);
    for (int v1 = 0; v1 < n; ++v1) {
      for (int v2 = 0; v2 < n; ++v2) {
        if (v1 == v2 || t.degree(v1) < 3 || t.degree(v2) < 3) continue;
        const std::uint64_t off_path = t.neighbors(v2) & ~bit(path_neighbor(t, v2, v1));
        for (Vertex keep : members(off_path)) {
          const auto step = branch_transfer_all_step(t, v2, v1, keep);
          if (t.degree(v1) < t.degree(v2)) ++reversed;
          const bool ok = !step.contracts.empty() && step.contracts_hold() &&
                          step.after.degree(v2) == 2 && is_tree(step.after) &&
                          pendant_count(step.after) == leaves;
          tally.check(ok, [&] { return describe_step(step); });
        }
      }
    }
  }
  tally.note(std::to_string(reversed) + " instances have d(v1) < d(v2)");
  return tally.finish();
}

VerificationReport lemma_branch_move(int n) {
  Tally tally("branch_move", n);
  std::uint64_t pi1_claim_holds = 0;
  std::uint64_t pi1_increases = 0;
  for (const auto& t : enumerate_trees(n)) {
    const int leaves = pendant_count(t);
    for (int v1 = 0; v1 < n; ++v1) {
      for (int v2 = 0; v2 < n; ++v2) {
        if (v1 == v2 || t.degree(v2) - t.degree(v1) < 2) continue;
        const auto step = branch_move_one_step(t, v2, v1);
        if (step.changed(Index::kPi1, Change::kDecrease)) ++pi1_claim_holds;
        if (step.changed(Index::kPi1, Change::kIncrease)) ++pi1_increases;
        const bool keeps_leaves =
            t.degree(v1) < 2 || pendant_count(step.after) == leaves;
        tally.check(!step.contracts.empty() && step.contracts_hold() &&
                        is_tree(step.after) && keeps_leaves,
                    [&] { return describe_step(step); });
      }
    }
  }
  tally.note("pi1 decreases in " + std::to_string(pi1_claim_holds) +
             " instances and increases in " + std::to_string(pi1_increases) +
             "; the verified inequality is the pi2 one");
  return tally.finish();
}

// Clique K_c with counts[i] pendants on clique vertex i.
Graph clique_with_pendants(const std::vector<int>& counts) {
  const int c = static_cast<int>(counts.size());
  int n = c;
  for (int x : counts) n += x;
  std::vector<Edge> edges;
  for (int u = 0; u < c; ++u) {
    for (int v = u + 1; v < c; ++v) edges.emplace_back(u, v);
  }
  int next = c;
  for (int i = 0; i < c; ++i) {
    for (int j = 0; j < counts[i]; ++j) edges.emplace_back(i, next++);
  }
  return Graph::from_edges(n, edges);
}

void compositions(int total, int parts, std::vector<int>& current,
                  const std::function<void(const std::vector<int>&)>& visit) {
  if (parts == 0) {
    if (total == 0) visit(current);
    return;
  }
  for (int x = 0; x <= total; ++x) {
    current.push_back(x);
    compositions(total - x, parts - 1, current, visit);
    current.pop_back();
  }
}

VerificationReport pendant_moves(int n) {
  Tally tally("pendant_move", n);
  for (int c = 2; c <= n - 2; ++c) {
    const int p = n - c;
    std::vector<int> current;
    compositions(p, c, current, [&](const std::vector<int>& counts) {
      const Graph g = clique_with_pendants(counts);
      if (pendant_count(g) != p) return;
      for (int i = 0; i < c; ++i) {
        if (counts[i] == 0) continue;
        for (int j = 0; j < c; ++j) {
          if (i == j) continue;
          const auto step = pendant_move_step(g, i, j);
          const bool stays = step.after.degree(i) >= 2;
          const bool ok = step.contracts_hold() &&
                          (!stays || pendant_count(step.after) == p);
          tally.check(ok, [&] { return describe_step(step); });
        }
      }
    });
  }
  return tally.finish();
}

}  // namespace

std::vector<VerificationReport> verify_lemmas(const LemmaLimits& limits, int jobs) {
  const int gmax = std::min(limits.graph_n_max, kMaxConnectedOrder);
  const int tmax = std::min(limits.tree_n_max, kMaxTreeOrder);
  const int xmax = std::min(limits.transfer_n_max, gmax);

  std::vector<std::function<VerificationReport()>> work;
  for (int n = 4; n <= tmax; ++n) work.push_back([n] { return lemma_tree_extremes(n); });
  for (int n = 2; n <= gmax; ++n) work.push_back([n] { return lemma_edge_addition(n); });
  for (int n = 5; n <= gmax; ++n) {
    work.push_back([n] { return lemma_sandwich(n, Index::kPi1); });
    work.push_back([n] { return lemma_sandwich(n, Index::kPi2); });
  }
  for (int n = 3; n <= xmax; ++n) work.push_back([n] { return lemma_neighbor_transfer(n); });
  for (int n = 6; n <= tmax; ++n) {
    work.push_back([n] { return lemma_branch_transfer(n); });
  }
  for (int n = 4; n <= tmax; ++n) work.push_back([n] { return lemma_branch_move(n); });
  for (int n = 3; n <= gmax; ++n) work.push_back([n] { return edge_deletion(n); });
  for (int n = 4; n <= gmax; ++n) work.push_back([n] { return pendant_moves(n); });

  std::vector<VerificationReport> out(work.size());
  detail::parallel_for(work.size(), jobs, [&](std::size_t i) { out[i] = work[i](); });
  if (out.empty()) {
    VerificationReport r;
    r.suite = "lemmas";
    r.params.n_max = std::max(gmax, tmax);
    r.status = Status::kSkipped;
    r.expected_source = "none";
    r.details = "orders too small for any lemma hypothesis";
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace mzi
