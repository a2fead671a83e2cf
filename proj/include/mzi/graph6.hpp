#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mzi/graph.hpp"

namespace mzi {

class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// graph6: order byte n+63 (or '~' plus three bytes for n = 63, 64), then the
// upper triangle x(0,1), x(0,2), x(1,2), x(0,3), ... packed six bits per
// byte, most significant first, each byte offset by 63, zero padded.
std::string to_graph6(const Graph& g);

// Strict: rejects bytes outside 63..126, short or long bodies and non-zero
// padding. Throws Graph6Error.
Graph parse_graph6(std::string_view text);

// One graph per line; blank lines and ">>graph6<<" headers are skipped.
std::vector<Graph> read_graph6_lines(std::istream& in);
void write_graph6_lines(std::ostream& out, const std::vector<Graph>& graphs);

}  // namespace mzi
