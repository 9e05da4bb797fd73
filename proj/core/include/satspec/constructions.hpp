#pragma once

#include <optional>
#include <string>
#include <vector>

#include "satspec/graph.hpp"

namespace satspec {

// Named families.  Vertex numbering is fixed per family so emitted graph6
// strings are stable: hub/dominating vertices first, then the cycle, then
// path and leaf vertices.

SimpleGraph complete_graph(int r);       // K_r, r >= 1
SimpleGraph star_join(int n, int t);     // S_{n,t} = K_t v empty(n-t), 1 <= t <= n-2
SimpleGraph wheel(int n);                // W_n = K_1 v C_{n-1}, n >= 5
SimpleGraph wheel_plus(int n, int p);    // W_n^{+p}: wheel plus a hub-to-rim path
                                         // through p new vertices, n >= 5, p >= 1
SimpleGraph generalized_wheel(int n, int t);  // W_{n,t} = K_t v C_{n-t}, n >= t+4
SimpleGraph spider_join(int n, int t);   // T_{n,t}: K_t joined to t+1 three-vertex
                                         // legs and one long leg, n >= 3t+5, t >= 1

struct FamilySpec {
  enum class Kind { CompleteK, Star, Wheel, WheelPlus, GenWheel, Spider };
  Kind kind;
  int a = 0;  // primary parameter (r or n)
  int b = 0;  // secondary parameter (t or p) where applicable
};

SimpleGraph build_family(const FamilySpec& spec);

// Blocks identified at one shared cut vertex.  Allowed block types: complete
// K_{3i-1}, wheel-plus W_a^{+p} (a >= 6, p >= 1) and star S_{b,2j-1}
// (b >= 3j >= 6).  Attachment: arbitrary in complete blocks, a path-part
// vertex in wheel-plus blocks, a non-dominating vertex in star blocks.
struct BlockStarSpec {
  struct CompleteBlock {
    int i = 1;  // block is K_{3i-1}
    int count = 0;
  };
  struct WheelPlusBlock {
    int a = 6;
    int p = 1;
    int count = 0;
  };
  struct StarBlock {
    int b = 6;
    int j = 2;  // block is S_{b,2j-1}
    int count = 0;
  };
  std::vector<CompleteBlock> complete_blocks;
  std::vector<WheelPlusBlock> wheel_plus_blocks;
  std::vector<StarBlock> star_blocks;

  int block_count() const;
  int target_k() const;     // 1 + sum (i-1)k_i + sum w_{a,p} + sum (j-1)s_{b,j}
  int vertex_count() const;
};

// Errors when the spec is empty, a parameter is out of range, the result
// would be a complete graph (a lone complete block), or it exceeds 62
// vertices.
SimpleGraph build_block_star(const BlockStarSpec& spec);

// Closed-form edge count; equals |E(build_block_star(spec))|.
int expected_edge_count(const BlockStarSpec& spec);

// Solves for a block-star with n vertices, m edges and packing bound k.
// Solver routes, tried in this order:
//   K5-blocks:  (k-1) copies of K5 plus pendant edges      (m = n+6k-7)
//   wheel-plus: (k-2) copies of K5, one W_a^{+1}, pendants (m in [n+6k-7, 2n+2k-6])
//   star-block: one S_{b,2k-1} block plus pendants         (m = (2k-2)b + n - 2k^2 + k)
//   star-mix:   k >= 3: one W_a^{+1}, S_{6,3} blocks and one more star block
// Returns the graph and the route taken, or the reason nothing applies.
struct ConstructOutcome {
  std::optional<SimpleGraph> graph;
  std::string detail;
};

ConstructOutcome construct_saturated(int n, int k, int m);

}  // namespace satspec
