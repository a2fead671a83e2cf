#include "mzi/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <stdexcept>
#include <tuple>

#include "mzi/canonical.hpp"
#include "mzi/constructions.hpp"
#include "mzi/enumeration.hpp"
#include "mzi/graph6.hpp"
#include "parallel.hpp"

namespace mzi {

namespace {

std::string dec(const BigPositive& v) { return v.str(); }

unsigned u(int x) { return static_cast<unsigned>(x); }

std::vector<std::string> codes_of(const std::vector<CanonicalCode>& codes) {
  std::vector<std::string> out;
  for (const auto& c : codes) out.push_back(c.bytes);
  return out;
}

std::vector<CanonicalCode> canonical_set(const std::vector<Graph>& graphs) {
  std::set<CanonicalCode> set;
  for (const auto& g : graphs) set.insert(canonical_form(g));
  return {set.begin(), set.end()};
}

void escalate(VerificationReport& r, Status s) {
  // A value mismatch outranks a witness mismatch.
  if (r.status == Status::kVerified ||
      (r.status == Status::kWitnessMismatch && s == Status::kFormulaMismatch)) {
    r.status = s;
  }
}

void append_detail(VerificationReport& r, const std::string& text) {
  if (!r.details.empty()) r.details += "; ";
  r.details += text;
}

// Compares one extremal search with its expected value and witness set.
void check_extremum(VerificationReport& r, const ExtremalReport& found,
                    const std::string& key, const BigPositive& expected_value,
                    const std::vector<CanonicalCode>& expected_witnesses) {
  r.expected[key] = dec(expected_value);
  r.observed[key] = dec(found.value);
  r.witnesses[key] = codes_of(found.witnesses);
  if (found.value != expected_value) {
    escalate(r, Status::kFormulaMismatch);
    append_detail(r, key + ": observed " + dec(found.value) + " expected " +
                         dec(expected_value));
  } else if (found.witnesses != expected_witnesses) {
    escalate(r, Status::kWitnessMismatch);
    append_detail(r, key + ": witness set differs from expected (" +
                         std::to_string(found.witnesses.size()) + " observed, " +
                         std::to_string(expected_witnesses.size()) + " expected)");
  }
}

void check_closed_form(VerificationReport& r, const std::string& key,
                       const BigPositive& construction, const BigPositive& closed) {
  r.expected[key + "_closed_form"] = dec(closed);
  if (construction != closed) {
    escalate(r, Status::kFormulaMismatch);
    append_detail(r, key + ": closed form " + dec(closed) +
                         " differs from construction " + dec(construction));
  }
}

void require_order(int n, int lo) {
  if (n < lo || n > kMaxConnectedOrder) {
    throw std::invalid_argument("order " + std::to_string(n) + " outside " +
                                std::to_string(lo) + ".." +
                                std::to_string(kMaxConnectedOrder));
  }
}

}  // namespace

const char* status_name(Status s) {
  switch (s) {
    case Status::kVerified: return "verified";
    case Status::kFormulaMismatch: return "formula_mismatch";
    case Status::kWitnessMismatch: return "witness_mismatch";
    case Status::kCounterexample: return "counterexample";
    case Status::kSkipped: return "skipped";
  }
  return "?";
}

bool is_failure(Status s) { return s != Status::kVerified && s != Status::kSkipped; }

BigPositive knk_pi1_formula(int n, int k) {
  return ipow(u(k), 2) * ipow(u(n - 1), u(2 * k)) * ipow(u(n - 2), u(2 * (n - k - 1)));
}

BigPositive knk_pi1_printed(int n, int k) {
  return ipow(u(k), 2) * ipow(u(n - k), u(2 * k)) * ipow(u(n - 2), u(2 * (n - k - 1)));
}

BigPositive knk_pi2_formula(int n, int k) {
  return ipow(u(k), u(k)) * ipow(u(n - 1), u(k * (n - 1))) *
         ipow(u(n - 2), u((n - 2) * (n - k - 1)));
}

BigPositive ga_pi1_formula(int n, int p) {
  const int core = n - p;
  const int l = p / core;
  const int t = p % core;
  return ipow(u(n + l - p), u(2 * t)) * ipow(u(n + l - p - 1), u(2 * (n - p - t)));
}

std::optional<BigPositive> ga_pi1_printed(int n, int p) {
  const int core = n - p;
  const int l = p / core;
  const int t = p % core;
  if (n - p - l < 0) return std::nullopt;
  return ipow(u(n + l - p), u(2 * t)) * ipow(u(n + l - p - 1), u(2 * (n - p - l)));
}

BigPositive gs_pi2_formula(int n, int p) {
  return ipow(u(n - 1), u(n - 1)) * ipow(u(n - p - 1), u((n - p - 1) * (n - p - 1)));
}

BigPositive spider_pi1_formula(int n, int p) {
  return ipow(u(p), 2) * ipow(2, u(2 * (n - p - 1)));
}

BigPositive balanced_tree_pi2_formula(int n, int p) {
  const auto b = a2_degrees(n, p);
  return ipow(u(b.k + 1), u(b.r * (b.k + 1))) * ipow(u(b.k), u(b.k * (n - p - b.r)));
}

VerificationReport verify_connectivity_max(int n, int k, ClassKind kind, int jobs) {
  require_order(n, 2);
  if (kind == ClassKind::kPendants) {
    throw std::invalid_argument("connectivity suite needs a connectivity class");
  }
  const ClassConstraint c{n, kind, k};
  c.validate();
  VerificationReport r;
  r.suite = "connectivity_max";
  r.params.n = n;
  r.params.k = k;
  r.params.kind = class_kind_name(kind);
  r.expected_source = "construction";

  const Graph knk = k_n_k(n, k);
  const std::vector<CanonicalCode> expected{canonical_form(knk)};
  const auto max1 = extremal_search(c, Index::kPi1, Direction::kMax, jobs);
  const auto max2 = extremal_search(c, Index::kPi2, Direction::kMax, jobs);
  r.class_size = max1.class_size;
  check_extremum(r, max1, "pi1_max", pi1_exact(knk), expected);
  check_extremum(r, max2, "pi2_max", pi2_exact(knk), expected);
  check_closed_form(r, "pi1_max", pi1_exact(knk), knk_pi1_formula(n, k));
  check_closed_form(r, "pi2_max", pi2_exact(knk), knk_pi2_formula(n, k));
  return r;
}

VerificationReport verify_printed_bound(int n, int k, int jobs) {
  require_order(n, 2);
  const ClassConstraint c = ClassConstraint::vertex(n, k);
  c.validate();
  VerificationReport r;
  r.suite = "knk_printed_bound";
  r.params.n = n;
  r.params.k = k;
  r.params.kind = "vnk";
  r.expected_source = "closed_form";

  const auto found = extremal_search(c, Index::kPi1, Direction::kMax, jobs);
  const BigPositive proof = knk_pi1_formula(n, k);
  const BigPositive printed = knk_pi1_printed(n, k);
  r.class_size = found.class_size;
  r.expected["pi1_max_proof_form"] = dec(proof);
  r.expected["pi1_max_printed_form"] = dec(printed);
  r.observed["pi1_max"] = dec(found.value);
  r.observed["printed_form_matches"] = printed == found.value ? "true" : "false";
  r.witnesses["pi1_max"] = codes_of(found.witnesses);

  if (proof != found.value) {
    r.status = Status::kFormulaMismatch;
    append_detail(r, "proof-derived value " + dec(proof) + " != observed " +
                         dec(found.value));
  }
  const bool must_differ = ipow(u(n - k), u(2 * k)) != ipow(u(n - 1), u(2 * k));
  if (must_differ && printed == found.value) {
    r.status = Status::kFormulaMismatch;
    append_detail(r, "printed form unexpectedly equals the observed maximum");
  }
  if (printed != found.value) {
    r.findings.push_back("printed bound " + dec(printed) + " differs from maximum " +
                         dec(found.value));
  }
  return r;
}

VerificationReport verify_connectivity_min(int n, ClassKind kind, int jobs) {
  require_order(n, 2);
  if (kind == ClassKind::kPendants) {
    throw std::invalid_argument("connectivity suite needs a connectivity class");
  }
  VerificationReport r;
  r.suite = "connectivity_min";
  r.params.n = n;
  r.params.kind = class_kind_name(kind);
  r.expected_source = "closed_form";

  const BigPositive pi1_min = ipow(u(n - 1), 2);
  const BigPositive pi2_min = ipow(4, u(n - 2));
  const std::vector<CanonicalCode> star_set{canonical_form(star(n))};
  const std::vector<CanonicalCode> path_set{canonical_form(path(n))};
  for (int k = 1; k <= n - 1; ++k) {
    const ClassConstraint c{n, kind, k};
    VerificationReport at_k;
    const auto min1 = extremal_search(c, Index::kPi1, Direction::kMin, jobs);
    const auto min2 = extremal_search(c, Index::kPi2, Direction::kMin, jobs);
    check_extremum(at_k, min1, "pi1_min", pi1_min, star_set);
    check_extremum(at_k, min2, "pi2_min", pi2_min, path_set);
    if (k == 1) {
      r.expected = at_k.expected;
      r.observed = at_k.observed;
      r.witnesses = at_k.witnesses;
    }
    r.class_size = std::max<std::uint64_t>(r.class_size, min1.class_size);
    if (at_k.status != Status::kVerified) {
      escalate(r, at_k.status);
      append_detail(r, "k=" + std::to_string(k) + ": " + at_k.details);
    }
  }
  check_closed_form(r, "pi1_min", pi1_exact(star(n)), pi1_min);
  check_closed_form(r, "pi2_min", pi2_exact(path(n)), pi2_min);
  return r;
}

VerificationReport verify_pendant_max(int n, int p, int jobs) {
  require_order(n, 4);
  if (p < 2 || p > n - 2) throw std::invalid_argument("pendant_max needs 2 <= p <= n-2");
  const ClassConstraint c = ClassConstraint::pendants(n, p);
  VerificationReport r;
  r.suite = "pendant_max";
  r.params.n = n;
  r.params.p = p;
  r.expected_source = "construction";

  const Graph ga = g_a(n, p);
  const Graph gs = g_s(n, p);
  const auto max1 = extremal_search(c, Index::kPi1, Direction::kMax, jobs);
  const auto max2 = extremal_search(c, Index::kPi2, Direction::kMax, jobs);
  r.class_size = max1.class_size;
  check_extremum(r, max1, "pi1_max", pi1_exact(ga), {canonical_form(ga)});
  check_extremum(r, max2, "pi2_max", pi2_exact(gs), {canonical_form(gs)});
  check_closed_form(r, "pi1_max", pi1_exact(ga), ga_pi1_formula(n, p));
  check_closed_form(r, "pi2_max", pi2_exact(gs), gs_pi2_formula(n, p));

  const auto printed = ga_pi1_printed(n, p);
  r.expected["pi1_max_printed_form"] = printed ? dec(*printed) : "non-integer";
  if (!printed || *printed != pi1_exact(ga)) {
    r.findings.push_back("printed G_a exponent 2(n-p-l) gives " +
                         (printed ? dec(*printed) : std::string("a non-integer")) +
                         ", G_a has " + dec(pi1_exact(ga)));
  }
  const int gs_pendants = pendant_count(gs);
  if (gs_pendants != p) {
    r.findings.push_back("G_s(" + std::to_string(n) + "," + std::to_string(p) +
                         ") has " + std::to_string(gs_pendants) +
                         " pendant vertices and lies outside the class");
  }
  return r;
}

VerificationReport verify_pendant_min(int n, int p, int jobs) {
  require_order(n, 3);
  if (p < 2 || p > n - 1) throw std::invalid_argument("pendant_min needs 2 <= p <= n-1");
  const ClassConstraint c = ClassConstraint::pendants(n, p);
  VerificationReport r;
  r.suite = "pendant_min";
  r.params.n = n;
  r.params.p = p;
  r.expected_source = "closed_form";

  const auto spiders = a1_trees(n, p);
  const auto balanced = a2_trees(n, p);
  const auto min1 = extremal_search(c, Index::kPi1, Direction::kMin, jobs);
  const auto min2 = extremal_search(c, Index::kPi2, Direction::kMin, jobs);
  r.class_size = min1.class_size;
  const BigPositive f1 = spider_pi1_formula(n, p);
  const BigPositive f2 = balanced_tree_pi2_formula(n, p);
  check_extremum(r, min1, "pi1_min", f1, canonical_set(spiders));
  check_extremum(r, min2, "pi2_min", f2, canonical_set(balanced));
  for (const auto& s : spiders) check_closed_form(r, "pi1_min", pi1_exact(s), f1);
  for (const auto& t : balanced) check_closed_form(r, "pi2_min", pi2_exact(t), f2);
  const auto b = a2_degrees(n, p);
  r.observed["balanced_k"] = std::to_string(b.k);
  r.observed["balanced_r"] = std::to_string(b.r);
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "all",         "connectivity", "connectivity_max", "connectivity_min",
      "errata",      "pendant",      "pendant_max",      "pendant_min",
      "lemmas",      "propositions"};
  return names;
}

namespace {

using Task = std::function<std::vector<VerificationReport>()>;

std::vector<VerificationReport> run_tasks(const std::vector<Task>& tasks, int jobs,
                                          bool timing) {
  std::vector<std::vector<VerificationReport>> results(tasks.size());
  detail::parallel_for(tasks.size(), jobs, [&](std::size_t i) {
    const auto start = std::chrono::steady_clock::now();
    results[i] = tasks[i]();
    if (!timing) return;
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    for (auto& r : results[i]) {
      if (!r.runtime_ms) r.runtime_ms = ms / static_cast<double>(results[i].size());
    }
  });
  std::vector<VerificationReport> out;
  for (auto& rs : results) {
    for (auto& r : rs) out.push_back(std::move(r));
  }
  return out;
}

auto sort_key(const VerificationReport& r) {
  return std::make_tuple(r.suite, r.params.n.value_or(-1), r.params.k.value_or(-1),
                         r.params.p.value_or(-1), r.params.kind,
                         r.params.m.value_or(-1.0), r.params.n_max.value_or(-1));
}

VerificationReport skipped(const std::string& suite, int n_max, const std::string& why) {
  VerificationReport r;
  r.suite = suite;
  r.params.n_max = n_max;
  r.status = Status::kSkipped;
  r.expected_source = "none";
  r.details = why;
  return r;
}

bool selects(const std::string& suite, const std::string& name) {
  if (suite == "all" || suite == name) return true;
  return name.starts_with(suite + "_");
}

}  // namespace

std::vector<VerificationReport> run_suite(const std::string& suite,
                                          const RunOptions& opt) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) ==
      suite_names().end()) {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  const int gmax = std::min(opt.graph_n_max, kMaxConnectedOrder);
  const int tmax = std::min(opt.tree_n_max, kMaxTreeOrder);
  const int jobs = std::max(1, opt.jobs);

  // Build the shared enumerations up front; instances then run in parallel.
  if (suite != "propositions" && suite != "lemmas") {
    for (int n = 2; n <= gmax; ++n) catalog(n, jobs)->kappa();
  }

  std::vector<Task> tasks;
  std::vector<VerificationReport> out;
  auto single = [](auto fn) -> Task {
    return [fn] { return std::vector<VerificationReport>{fn()}; };
  };

  if (selects(suite, "connectivity_max")) {
    std::size_t before = tasks.size();
    for (int n = 2; n <= gmax; ++n) {
      for (int k = 1; k <= n - 1; ++k) {
        for (ClassKind kind : {ClassKind::kVertexConnectivity, ClassKind::kEdgeConnectivity}) {
          tasks.push_back(single([=] { return verify_connectivity_max(n, k, kind); }));
        }
      }
    }
    if (tasks.size() == before) out.push_back(skipped("connectivity_max", gmax, "no orders >= 2"));
  }
  if (selects(suite, "connectivity_min")) {
    std::size_t before = tasks.size();
    for (int n = 2; n <= gmax; ++n) {
      for (ClassKind kind : {ClassKind::kVertexConnectivity, ClassKind::kEdgeConnectivity}) {
        tasks.push_back(single([=] { return verify_connectivity_min(n, kind); }));
      }
    }
    if (tasks.size() == before) out.push_back(skipped("connectivity_min", gmax, "no orders >= 2"));
  }
  if (suite == "all" || suite == "errata") {
    std::size_t before = tasks.size();
    for (int n = 2; n <= gmax; ++n) {
      for (int k = 1; k <= n - 1; ++k) {
        tasks.push_back(single([=] { return verify_printed_bound(n, k); }));
      }
    }
    if (tasks.size() == before) out.push_back(skipped("knk_printed_bound", gmax, "no orders >= 2"));
  }
  if (selects(suite, "pendant_max")) {
    std::size_t before = tasks.size();
    for (int n = 4; n <= gmax; ++n) {
      for (int p = 2; p <= n - 2; ++p) {
        tasks.push_back(single([=] { return verify_pendant_max(n, p); }));
      }
    }
    if (tasks.size() == before) {
      out.push_back(skipped("pendant_max", gmax, "needs n >= 4 for 2 <= p <= n-2"));
    }
  }
  if (selects(suite, "pendant_min")) {
    std::size_t before = tasks.size();
    for (int n = 3; n <= gmax; ++n) {
      for (int p = 2; p <= n - 1; ++p) {
        tasks.push_back(single([=] { return verify_pendant_min(n, p); }));
      }
    }
    if (tasks.size() == before) {
      out.push_back(skipped("pendant_min", gmax, "needs n >= 3 for 2 <= p <= n-1"));
    }
  }
  if (suite == "all" || suite == "lemmas") {
    LemmaLimits limits{gmax, tmax, gmax};
    tasks.push_back([=] { return verify_lemmas(limits, jobs); });
  }
  if (suite == "all" || suite == "propositions") {
    tasks.push_back([] { return verify_propositions(PropositionGrid{}); });
  }

  for (auto& r : run_tasks(tasks, jobs, opt.timing)) out.push_back(std::move(r));
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return sort_key(a) < sort_key(b);
  });
  return out;
}

SuiteSummary summarize(std::vector<VerificationReport> reports) {
  SuiteSummary s;
  for (const auto& r : reports) {
    if (r.status == Status::kVerified) {
      ++s.verified;
    } else if (r.status == Status::kSkipped) {
      ++s.skipped;
    } else {
      ++s.failed;
    }
  }
  s.reports = std::move(reports);
  return s;
}

SuiteSummary run_all(const RunOptions& options) {
  return summarize(run_suite("all", options));
}

}  // namespace mzi
