#pragma once

#include <vector>

#include "satspec/graph.hpp"

namespace satspec {

// One block: the vertex set of a maximal 2-connected subgraph or of a single
// bridge edge (trivial block, isomorphic to K2).
struct Block {
  std::vector<int> vertices;  // sorted
  bool trivial = false;
};

struct BlockDecomposition {
  std::vector<Block> blocks;      // ordered by smallest contained vertex
  std::vector<int> cut_vertices;  // sorted

  int nontrivial_count() const {
    int c = 0;
    for (const auto& b : blocks)
      if (!b.trivial) ++c;
    return c;
  }
};

// Standard DFS block/cut-vertex decomposition.  Isolated vertices belong to
// no block; every edge lies in exactly one block.
BlockDecomposition blocks(const SimpleGraph& g);

// n >= 3, connected, and no cut vertex.
bool is_biconnected(const SimpleGraph& g);

}  // namespace satspec
