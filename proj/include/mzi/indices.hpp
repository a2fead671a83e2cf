#pragma once

#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "mzi/graph.hpp"

namespace mzi {

// Exact non-negative integer; index values overflow 64 bits at small orders.
using BigPositive = boost::multiprecision::cpp_int;

// Natural logarithm of an index value.
struct LogValue {
  double value = 0.0;
};

class DegenerateIndexError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// First multiplicative Zagreb index: product of squared degrees. An isolated
// vertex contributes a factor 0.
BigPositive pi1_exact(const Graph& g);

// Second multiplicative Zagreb index, vertex form prod d(u)^d(u) with the
// convention 0^0 = 1. Equal to the edge form prod_{uv} d(u)d(v).
BigPositive pi2_exact(const Graph& g);

BigPositive m1(const Graph& g);
BigPositive m2(const Graph& g);

// Throw DegenerateIndexError when some vertex has degree 0.
LogValue pi1_log(const Graph& g);
LogValue pi2_log(const Graph& g);

// Both indices depend only on the degree multiset.
BigPositive pi1_from_degrees(const std::vector<int>& degrees);
BigPositive pi2_from_degrees(const std::vector<int>& degrees);

BigPositive ipow(unsigned base, unsigned exponent);

enum class Index { kPi1, kPi2 };

BigPositive index_value(const Graph& g, Index index);
const char* index_name(Index index);

}  // namespace mzi
