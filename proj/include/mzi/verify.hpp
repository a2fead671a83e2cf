#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mzi/connectivity.hpp"
#include "mzi/indices.hpp"

namespace mzi {

enum class Status {
  kVerified,
  kFormulaMismatch,
  kWitnessMismatch,
  kCounterexample,
  kSkipped,
};

const char* status_name(Status s);
bool is_failure(Status s);

struct ReportParams {
  std::optional<int> n;
  std::optional<int> k;
  std::optional<int> p;
  std::optional<int> n_max;
  std::string kind;  // "vnk" / "enk" / proposition parameter, may be empty
  std::optional<double> m;
};

// Outcome of one suite instance. Exact values are kept as decimal strings so
// reports serialise without loss.
struct VerificationReport {
  std::string suite;
  ReportParams params;
  // construction | closed_form | exhaustive | analytic
  std::string expected_source;
  Status status = Status::kVerified;
  std::map<std::string, std::string> expected;
  std::map<std::string, std::string> observed;
  // Observed extremal witnesses as graph6, keyed by "pi1_max" etc.
  std::map<std::string, std::vector<std::string>> witnesses;
  std::uint64_t class_size = 0;
  // Hypothesis instances examined (lemma and proposition suites).
  std::uint64_t instances = 0;
  std::vector<std::string> findings;
  std::string details;
  // Wall time, only filled when timing was requested.
  std::optional<double> runtime_ms;
};

// Maxima over kappa <= k (kind vnk) or kappa' <= k (kind enk) against
// K_n^k. Requires 1 <= k <= n-1, 2 <= n <= 9.
VerificationReport verify_connectivity_max(int n, int k, ClassKind kind, int jobs = 1);

// Compares the maximum of pi1 over vnk(n,k) with the proof-derived value
// k^2 (n-1)^(2k) (n-2)^(2(n-k-1)) and with the printed statement
// k^2 (n-k)^(2k) (n-2)^(2(n-k-1)). Verified iff the proof-derived value
// matches and the printed one differs whenever (n-k)^(2k) != (n-1)^(2k).
VerificationReport verify_printed_bound(int n, int k, int jobs = 1);

// Minima over every cap k in 1..n-1: pi1 = (n-1)^2 only at S_n, pi2 = 4^(n-2)
// only at P_n.
VerificationReport verify_connectivity_min(int n, ClassKind kind, int jobs = 1);

// Maxima over exactly-p-pendant graphs: pi1 at G_a, pi2 at G_s.
// Requires 2 <= p <= n-2.
VerificationReport verify_pendant_max(int n, int p, int jobs = 1);

// Minima over exactly-p-pendant graphs: pi1 at the spiders, pi2 at the
// balanced-degree trees. Requires 2 <= p <= n-1.
VerificationReport verify_pendant_min(int n, int p, int jobs = 1);

struct LemmaLimits {
  int graph_n_max = 7;
  int tree_n_max = 9;
  // Order limit for the neighbour-transfer check.
  int transfer_n_max = 7;
};

// One report per (lemma, n) for every hypothesis instance up to the limits.
std::vector<VerificationReport> verify_lemmas(const LemmaLimits& limits, int jobs = 1);

struct PropositionGrid {
  int points = 200;
  double x_max = 10.0;
  std::vector<double> m_values{0.0, 0.5, 1.0, 2.0, 10.0};
  int n_min = 4;
  int n_max = 20;
  double margin = 1e-12;
};

std::vector<VerificationReport> verify_propositions(const PropositionGrid& grid);

// Scalar functions in log form; x must lie in the domain.
double log_f1(double x, double m);  // (x+m)^x / (x-1+m)^(x-1)
double log_f2(double x, double m);  // x^x / (x+m)^(x+m)
double log_f3(double x, int n);     // x^2 (n-x)^2

// Closed forms.
BigPositive knk_pi1_formula(int n, int k);
BigPositive knk_pi1_printed(int n, int k);
BigPositive knk_pi2_formula(int n, int k);
// (n+l-p)^(2t) (n+l-p-1)^(2(n-p-t)) with p = l(n-p)+t.
BigPositive ga_pi1_formula(int n, int p);
// Same with exponent 2(n-p-l) on the second factor, as printed; empty when
// that exponent is negative.
std::optional<BigPositive> ga_pi1_printed(int n, int p);
BigPositive gs_pi2_formula(int n, int p);
BigPositive spider_pi1_formula(int n, int p);
BigPositive balanced_tree_pi2_formula(int n, int p);

struct RunOptions {
  int graph_n_max = 7;
  int tree_n_max = 9;
  int jobs = 1;
  bool timing = false;
};

const std::vector<std::string>& suite_names();

// Runs one suite ("connectivity", "pendant", "lemmas", "propositions",
// "errata" or "all"). Reports are sorted by (suite, n, k, p, kind).
// Throws std::invalid_argument for an unknown suite.
std::vector<VerificationReport> run_suite(const std::string& suite,
                                          const RunOptions& options);

struct SuiteSummary {
  std::vector<VerificationReport> reports;
  std::size_t verified = 0;
  std::size_t skipped = 0;
  std::size_t failed = 0;
  bool ok() const { return failed == 0; }
};

SuiteSummary run_all(const RunOptions& options);
SuiteSummary summarize(std::vector<VerificationReport> reports);

}  // namespace mzi
