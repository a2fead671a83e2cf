#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "mzi/verify.hpp"

namespace mzi {

namespace {

// t ln t with the 0 ln 0 = 0 convention.
double xlogx(double t) { return t == 0.0 ? 0.0 : t * std::log(t); }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::vector<double> grid_points(double lo, double hi, int points, bool open_lo) {
  std::vector<double> xs;
  const int first = open_lo ? 1 : 0;
  for (int i = first; i <= points; ++i) {
    xs.push_back(lo + (hi - lo) * i / points);
  }
  return xs;
}

enum class Trend { kIncreasing, kDecreasing, kConstant };

// Checks monotonicity of f over consecutive points and fills the report.
template <typename F>
void check_trend(VerificationReport& r, const std::vector<double>& xs, F f, Trend trend,
                 double margin) {
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const double d = f(xs[i + 1]) - f(xs[i]);
    double slack = 0.0;
    switch (trend) {
      case Trend::kIncreasing: slack = d - margin; break;
      case Trend::kDecreasing: slack = -d - margin; break;
      case Trend::kConstant: slack = margin - std::abs(d); break;
    }
    ++r.instances;
    if (slack < worst) worst = slack;
    if (slack <= 0.0 && r.status != Status::kCounterexample) {
      r.status = Status::kCounterexample;
      r.details = "between x=" + fmt(xs[i]) + " and x=" + fmt(xs[i + 1]) +
                  " log difference is " + fmt(d);
    }
  }
  r.observed["min_slack"] = fmt(worst);
  r.observed["points"] = std::to_string(xs.size());
}

VerificationReport base(const std::string& suite, const char* expected) {
  VerificationReport r;
  r.suite = suite;
  r.expected_source = "analytic";
  r.expected["trend"] = expected;
  return r;
}

}  // namespace

double log_f1(double x, double m) {
  return x * std::log(x + m) - (x - 1.0) * std::log(x - 1.0 + m);
}

double log_f2(double x, double m) { return xlogx(x) - xlogx(x + m); }

double log_f3(double x, int n) { return 2.0 * std::log(x) + 2.0 * std::log(n - x); }

std::vector<VerificationReport> verify_propositions(const PropositionGrid& grid) {
  std::vector<VerificationReport> out;

  for (double m : grid.m_values) {
    auto r = base("f1_increasing", "increasing");
    r.params.m = m;
    const double lo = std::max(0.0, 1.0 - m);
    const auto xs = grid_points(lo, grid.x_max, grid.points, true);
    check_trend(r, xs, [m](double x) { return log_f1(x, m); }, Trend::kIncreasing,
                grid.margin);
    out.push_back(std::move(r));
  }

  for (double m : grid.m_values) {
    const bool flat = m == 0.0;
    auto r = base("f2_decreasing", flat ? "constant" : "decreasing");
    r.params.m = m;
    const auto xs = grid_points(0.0, grid.x_max, grid.points, true);
    check_trend(r, xs, [m](double x) { return log_f2(x, m); },
                flat ? Trend::kConstant : Trend::kDecreasing, grid.margin);
    if (flat) r.findings.push_back("with m = 0 the function is identically 1");
    out.push_back(std::move(r));
  }

  for (int n = grid.n_min; n <= grid.n_max; ++n) {
    auto r = base("f3_increasing", "increasing");
    r.params.n = n;
    auto xs = grid_points(1.0, static_cast<double>(n / 2), grid.points, false);
    for (int x = 1; x <= n / 2; ++x) xs.push_back(x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end(),
                         [](double a, double b) { return b - a < 1e-9; }),
             xs.end());
    check_trend(r, xs, [n](double x) { return log_f3(x, n); }, Trend::kIncreasing,
                grid.margin);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace mzi
