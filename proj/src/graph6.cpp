#include "mzi/graph6.hpp"

#include <istream>
#include <ostream>

namespace mzi {

namespace {

constexpr int kOffset = 63;

std::size_t body_length(int n) {
  std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kOffset));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kOffset));
    out.push_back(static_cast<char>((n & 63) + kOffset));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kOffset));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
  }
  return out;
}

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw Graph6Error("graph6: empty input");
  for (char c : text) {
    auto b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126) {
      throw Graph6Error("graph6: byte " + std::to_string(b) +
                        " outside 63..126");
    }
  }
  int n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = text[0] - kOffset;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == '~') {
      throw Graph6Error("graph6: unsupported or truncated order field");
    }
    n = ((text[1] - kOffset) << 12) | ((text[2] - kOffset) << 6) |
        (text[3] - kOffset);
    pos = 4;
  }
  if (n < 1 || n > Graph::kMaxOrder) {
    throw Graph6Error("graph6: order " + std::to_string(n) +
                      " outside supported range 1..64");
  }
  const std::size_t expected = body_length(n);
  const std::size_t actual = text.size() - pos;
  if (actual < expected) throw Graph6Error("graph6: body too short");
  if (actual > expected) throw Graph6Error("graph6: trailing garbage");

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = text[pos + k / 6] - kOffset;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (k % 6 != 0) {
    int last = text.back() - kOffset;
    if ((last & ((1 << (6 - k % 6)) - 1)) != 0) {
      throw Graph6Error("graph6: non-zero padding bits");
    }
  }
  return Graph::from_edges(n, edges);
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.pop_back();
    }
    if (line.starts_with(">>graph6<<")) line.erase(0, 10);
    if (line.empty()) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

void write_graph6_lines(std::ostream& out, const std::vector<Graph>& graphs) {
  for (const auto& g : graphs) out << to_graph6(g) << '\n';
}

}  // namespace mzi
