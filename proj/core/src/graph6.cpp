#include "satspec/graph6.hpp"

#include <vector>

namespace satspec {

SimpleGraph parse_graph6(std::string_view line) {
  if (line.empty()) throw Graph6Error("empty graph6 line", 0);
  unsigned char size_byte = static_cast<unsigned char>(line[0]);
  if (size_byte == 126) {
    throw Graph6Error("multi-byte graph6 size field (n > 62) not supported", 0);
  }
  if (size_byte < 63 || size_byte > 125) {
    throw Graph6Error("invalid graph6 size byte", 0);
  }
  int n = size_byte - 63;
  int nbits = n * (n - 1) / 2;
  size_t nbytes = static_cast<size_t>((nbits + 5) / 6);
  if (line.size() < 1 + nbytes) {
    throw Graph6Error("graph6 line too short", line.size());
  }
  if (line.size() > 1 + nbytes) {
    throw Graph6Error("graph6 line too long", 1 + nbytes);
  }

  std::vector<std::pair<int, int>> edges;
  int pos = 0, i = 0, j = 1;
  for (size_t b = 0; b < nbytes; ++b) {
    unsigned char c = static_cast<unsigned char>(line[1 + b]);
    if (c < 63 || c > 126) throw Graph6Error("invalid graph6 data byte", 1 + b);
    int group = c - 63;
    for (int s = 5; s >= 0; --s, ++pos) {
      int v = (group >> s) & 1;
      if (pos < nbits) {
        if (v) edges.emplace_back(i, j);
        if (++i == j) {
          i = 0;
          ++j;
        }
      } else if (v) {
        throw Graph6Error("nonzero graph6 padding bits", 1 + b);
      }
    }
  }
  return SimpleGraph::from_edges(n, edges);
}

std::string emit_graph6(const SimpleGraph& g) {
  int n = g.n();
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int group = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + group));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    group <<= (6 - filled);
    out.push_back(static_cast<char>(63 + group));
  }
  return out;
}

}  // namespace satspec
