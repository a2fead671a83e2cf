#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "mzi/canonical.hpp"
#include "mzi/constructions.hpp"
#include "mzi/enumeration.hpp"
#include "mzi/graph6.hpp"
#include "mzi/indices.hpp"
#include "mzi/report_io.hpp"
#include "mzi/verify.hpp"

namespace mzi::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int default_jobs() {
  if (const char* env = std::getenv("MZI_JOBS")) {
    try {
      const int j = std::stoi(env);
      if (j >= 1) return j;
    } catch (const std::exception&) {
    }
    throw UsageError("MZI_JOBS must be a positive integer");
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

struct ComputeArgs {
  std::string graph6;
  std::string file;
  bool all = false;
  std::string format = "text";
};

struct ConstructArgs {
  FamilyParams params;
};

struct ExtremalArgs {
  std::string cls;
  int n = 0;
  std::optional<int> k, p;
  std::string index = "pi1";
  std::string direction = "max";
  std::string format = "json";
  std::optional<int> jobs;
};

struct VerifyArgs {
  std::string suite = "all";
  std::optional<int> n_max;
  std::optional<int> tree_n_max;
  std::string format = "text";
  std::string out;
  std::optional<int> jobs;
  bool timing = false;
};

struct EnumerateArgs {
  int n = 0;
  bool trees = false;
  std::optional<int> jobs;
};

std::string fixed(double v) {
  std::ostringstream os;
  os << std::setprecision(15) << v;
  return os.str();
}

int cmd_compute(const ComputeArgs& a, std::ostream& out) {
  if (a.graph6.empty() == a.file.empty()) {
    throw UsageError("compute needs exactly one of --graph6 or --file");
  }
  std::vector<Graph> graphs;
  if (!a.graph6.empty()) {
    graphs.push_back(parse_graph6(a.graph6));
  } else if (a.file == "-") {
    graphs = read_graph6_lines(std::cin);
  } else {
    std::ifstream in(a.file);
    if (!in) throw UsageError("cannot open " + a.file);
    graphs = read_graph6_lines(in);
  }
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& g : graphs) {
    const std::string code = to_graph6(g);
    const auto p1 = pi1_exact(g);
    const auto p2 = pi2_exact(g);
    std::optional<double> l1, l2;
    if (a.all) {
      try {
        l1 = pi1_log(g).value;
        l2 = pi2_log(g).value;
      } catch (const DegenerateIndexError&) {
      }
    }
    if (a.format == "json") {
      nlohmann::ordered_json j;
      j["graph6"] = code;
      j["pi1"] = p1.str();
      j["pi2"] = p2.str();
      if (a.all) {
        j["m1"] = m1(g).str();
        j["m2"] = m2(g).str();
        j["log_pi1"] = l1 ? nlohmann::ordered_json(*l1) : nullptr;
        j["log_pi2"] = l2 ? nlohmann::ordered_json(*l2) : nullptr;
      }
      arr.push_back(j);
      continue;
    }
    out << code << " pi1=" << p1.str() << " pi2=" << p2.str();
    if (a.all) {
      out << " m1=" << m1(g).str() << " m2=" << m2(g).str()
          << " log_pi1=" << (l1 ? fixed(*l1) : "-inf")
          << " log_pi2=" << (l2 ? fixed(*l2) : "-inf");
    }
    out << '\n';
  }
  if (a.format == "json") out << arr.dump(2) << '\n';
  return kOk;
}

int cmd_construct(const ConstructArgs& a, std::ostream& out) {
  std::vector<Graph> graphs;
  try {
    graphs = construct(a.params);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  write_graph6_lines(out, graphs);
  return kOk;
}

ClassConstraint constraint_for(const std::string& cls, int n, std::optional<int> k,
                               std::optional<int> p) {
  if (cls == "vnk" || cls == "enk") {
    if (!k || p) throw UsageError("--class " + cls + " takes --k and not --p");
    return cls == "vnk" ? ClassConstraint::vertex(n, *k) : ClassConstraint::edge(n, *k);
  }
  if (cls == "gnp") {
    if (!p || k) throw UsageError("--class gnp takes --p and not --k");
    return ClassConstraint::pendants(n, *p);
  }
  throw UsageError("unknown class " + cls);
}

int cmd_extremal(const ExtremalArgs& a, std::ostream& out, std::ostream& err) {
  const auto c = constraint_for(a.cls, a.n, a.k, a.p);
  const Index index = a.index == "pi1" ? Index::kPi1 : Index::kPi2;
  const Direction dir = a.direction == "max" ? Direction::kMax : Direction::kMin;
  const int jobs = a.jobs.value_or(default_jobs());
  ExtremalReport r;
  try {
    r = extremal_search(c, index, dir, jobs);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  for (const auto& w : r.witnesses) {
    const Graph g = parse_graph6(w.bytes);
    if (index_value(g, index) != r.value || !in_class(g, c)) {
      err << "witness " << w.bytes << " disagrees with the reported extremum\n";
      return kFailure;
    }
  }
  if (a.format == "csv") {
    write_csv(out, r);
  } else {
    out << to_json(r) << '\n';
  }
  return kOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), a.suite) == names.end()) {
    throw UsageError("unknown suite " + a.suite);
  }
  RunOptions opts;
  if (a.n_max) opts.graph_n_max = *a.n_max;
  if (a.tree_n_max) {
    opts.tree_n_max = *a.tree_n_max;
  } else if (a.n_max) {
    opts.tree_n_max = std::min(std::max(*a.n_max, opts.tree_n_max), kMaxTreeOrder);
  }
  if (opts.graph_n_max < 1 || opts.graph_n_max > kMaxConnectedOrder) {
    throw UsageError("--n-max must lie in 1.." + std::to_string(kMaxConnectedOrder));
  }
  if (opts.tree_n_max < 1 || opts.tree_n_max > kMaxTreeOrder) {
    throw UsageError("--tree-n-max must lie in 1.." + std::to_string(kMaxTreeOrder));
  }
  opts.jobs = a.jobs.value_or(default_jobs());
  opts.timing = a.timing;

  const SuiteSummary summary = summarize(run_suite(a.suite, opts));

  std::ostringstream body;
  if (a.format == "json") {
    body << to_json(summary.reports) << '\n';
  } else if (a.format == "csv") {
    write_csv(body, summary.reports);
  } else {
    for (const auto& r : summary.reports) {
      body << std::left << std::setw(17) << status_name(r.status) << ' ' << r.suite;
      if (r.params.n) body << " n=" << *r.params.n;
      if (r.params.k) body << " k=" << *r.params.k;
      if (r.params.p) body << " p=" << *r.params.p;
      if (!r.params.kind.empty()) body << " kind=" << r.params.kind;
      if (r.params.m) body << " m=" << *r.params.m;
      if (r.params.n_max) body << " n_max=" << *r.params.n_max;
      if (is_failure(r.status) && !r.details.empty()) body << "  " << r.details;
      body << '\n';
    }
  }
  if (a.out.empty()) {
    out << body.str();
  } else {
    std::ofstream file(a.out);
    if (!file) throw UsageError("cannot write " + a.out);
    file << body.str();
  }
  err << "verified " << summary.verified << ", skipped " << summary.skipped
      << ", failed " << summary.failed << '\n';
  return summary.ok() ? kOk : kFailure;
}

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out) {
  const int limit = a.trees ? kMaxTreeOrder : kMaxConnectedOrder;
  if (a.n < 1 || a.n > limit) {
    throw UsageError("--n must lie in 1.." + std::to_string(limit));
  }
  const int jobs = a.jobs.value_or(default_jobs());
  write_graph6_lines(out, a.trees ? enumerate_trees(a.n, jobs)
                                  : enumerate_connected(a.n, jobs));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact multiplicative Zagreb indices and extremal graph verification", "mzi"};
  app.require_subcommand(1, 1);

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Print pi1 and pi2 of graph6 input");
  c->add_option("--graph6", compute.graph6, "graph6 string");
  c->add_option("--file", compute.file, "File of graph6 lines, - for stdin");
  c->add_flag("--all", compute.all, "Also print M1, M2 and log values");
  c->add_option("--format", compute.format)->check(CLI::IsMember({"text", "json"}));

  ConstructArgs construct_args;
  std::optional<int> ck, cp, cj;
  auto* k = app.add_subcommand("construct", "Emit graph6 of a named family");
  k->add_option("--family", construct_args.params.family)
      ->required()
      ->check(CLI::IsMember({"complete", "path", "star", "cycle", "knk", "sandwich", "ga",
                             "gs", "a1", "a2"}));
  k->add_option("--n", construct_args.params.n)->required();
  k->add_option("--k", ck);
  k->add_option("--p", cp);
  k->add_option("--j", cj);
  k->add_option("--legs", construct_args.params.legs, "Spider leg lengths")->delimiter(',');

  ExtremalArgs extremal;
  auto* e = app.add_subcommand("extremal", "Exhaustive extremum over a graph class");
  e->add_option("--class", extremal.cls)->required()->check(
      CLI::IsMember({"vnk", "enk", "gnp"}));
  e->add_option("--n", extremal.n)->required();
  e->add_option("--k", extremal.k);
  e->add_option("--p", extremal.p);
  e->add_option("--index", extremal.index)->check(CLI::IsMember({"pi1", "pi2"}));
  e->add_option("--direction", extremal.direction)->check(CLI::IsMember({"max", "min"}));
  e->add_option("--format", extremal.format)->check(CLI::IsMember({"json", "csv"}));
  e->add_option("--jobs", extremal.jobs)->check(CLI::PositiveNumber);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run verification suites");
  v->add_option("--suite", verify.suite);
  v->add_option("--n-max", verify.n_max, "Largest order for graph suites (default 7)");
  v->add_option("--tree-n-max", verify.tree_n_max,
                "Largest order for tree suites (default 9)");
  v->add_option("--format", verify.format)->check(CLI::IsMember({"text", "json", "csv"}));
  v->add_option("--out", verify.out, "Write reports to this file");
  v->add_option("--jobs", verify.jobs)->check(CLI::PositiveNumber);
  v->add_flag("--timing", verify.timing, "Record runtime_ms per report");

  EnumerateArgs enumerate;
  auto* n = app.add_subcommand("enumerate", "List connected graphs or trees as graph6");
  n->add_option("--n", enumerate.n)->required();
  n->add_flag("--trees", enumerate.trees);
  n->add_option("--jobs", enumerate.jobs)->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  }

  try {
    if (*c) return cmd_compute(compute, out);
    if (*k) {
      construct_args.params.k = ck;
      construct_args.params.p = cp;
      construct_args.params.j = cj;
      return cmd_construct(construct_args, out);
    }
    if (*e) return cmd_extremal(extremal, out, err);
    if (*v) return cmd_verify(verify, out, err);
    if (*n) return cmd_enumerate(enumerate, out);
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const Graph6Error& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const std::exception& ex) {
    err << "internal error: " << ex.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace mzi::cli
