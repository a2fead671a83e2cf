#include "mzi/indices.hpp"

#include <cmath>

namespace mzi {

BigPositive ipow(unsigned base, unsigned exponent) {
  return boost::multiprecision::pow(BigPositive(base), exponent);
}

BigPositive pi1_from_degrees(const std::vector<int>& degrees) {
  BigPositive product = 1;
  for (int d : degrees) product *= static_cast<unsigned>(d * d);
  return product;
}

BigPositive pi2_from_degrees(const std::vector<int>& degrees) {
  BigPositive product = 1;
  for (int d : degrees) {
    if (d > 1) product *= ipow(static_cast<unsigned>(d), static_cast<unsigned>(d));
  }
  return product;
}

BigPositive pi1_exact(const Graph& g) {
  BigPositive product = 1;
  for (int v = 0; v < g.order(); ++v) {
    const unsigned d = static_cast<unsigned>(g.degree(v));
    product *= d * d;
  }
  return product;
}

BigPositive pi2_exact(const Graph& g) {
  BigPositive product = 1;
  for (int v = 0; v < g.order(); ++v) {
    const unsigned d = static_cast<unsigned>(g.degree(v));
    if (d > 1) product *= ipow(d, d);
  }
  return product;
}

BigPositive m1(const Graph& g) {
  BigPositive sum = 0;
  for (int v = 0; v < g.order(); ++v) sum += g.degree(v) * g.degree(v);
  return sum;
}

BigPositive m2(const Graph& g) {
  BigPositive sum = 0;
  for (auto [u, v] : g.edges()) sum += g.degree(u) * g.degree(v);
  return sum;
}

namespace {

void require_no_isolated(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) {
      throw DegenerateIndexError("vertex " + std::to_string(v) +
                                 " is isolated; log of index is -inf");
    }
  }
}

}  // namespace

LogValue pi1_log(const Graph& g) {
  require_no_isolated(g);
  double sum = 0.0;
  for (int v = 0; v < g.order(); ++v) sum += 2.0 * std::log(g.degree(v));
  return {sum};
}

LogValue pi2_log(const Graph& g) {
  require_no_isolated(g);
  double sum = 0.0;
  for (int v = 0; v < g.order(); ++v) {
    const double d = g.degree(v);
    sum += d * std::log(d);
  }
  return {sum};
}

BigPositive index_value(const Graph& g, Index index) {
  return index == Index::kPi1 ? pi1_exact(g) : pi2_exact(g);
}

const char* index_name(Index index) {
  return index == Index::kPi1 ? "pi1" : "pi2";
}

}  // namespace mzi
