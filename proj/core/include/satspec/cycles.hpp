#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "satspec/graph.hpp"

namespace satspec {

// A certificate: pairwise vertex-disjoint cycles, each stored as its vertex
// sequence in cycle order.
struct CyclePacking {
  std::vector<std::vector<int>> cycles;
  int size() const { return static_cast<int>(cycles.size()); }
};

// Re-checks a packing against g: every listed sequence is a cycle in g
// (length >= 3, consecutive and wrap-around pairs are edges, no repeats) and
// the vertex sets are pairwise disjoint.
bool validate_packing(const SimpleGraph& g, const CyclePacking& p);
bool validate_cycle(const SimpleGraph& g, const std::vector<int>& cycle);

// Exact maximum number of pairwise vertex-disjoint cycles together with a
// packing attaining it.  Branch and bound: the pivot (minimum-degree alive
// vertex) is either unused or lies on a chordless cycle; branching is
// restricted to chordless cycles, which preserves the optimum because every
// cycle contains a chordless cycle on a subset of its vertices.
std::pair<int, CyclePacking> max_disjoint_cycles(const SimpleGraph& g);

// Early-exit decision version; does not optimize beyond k.
std::optional<CyclePacking> has_k_disjoint_cycles(const SimpleGraph& g, int k);

// Restriction of the searches to an alive-vertex mask; cycles are reported
// with the original vertex labels.
std::optional<CyclePacking> has_k_disjoint_cycles_in(const SimpleGraph& g, uint64_t alive, int k);

struct PathWithPacking {
  std::vector<int> path;  // u..v, possibly the single vertex u when u == v
  CyclePacking packing;   // lives in G - V(path)
};

// Finds a u-v path P (at least min_path_vertices vertices) such that
// G - V(P) still packs c disjoint cycles.  Exact search.
std::optional<PathWithPacking> path_with_residual_packing(const SimpleGraph& g, int u, int v,
                                                          int c, int min_path_vertices = 1);

// Topological K4 certificate: four branch vertices joined by six internally
// disjoint paths, listed for the pairs (0,1),(0,2),(0,3),(1,2),(1,3),(2,3).
struct K4Subdivision {
  std::array<int, 4> branch{};
  std::array<std::vector<int>, 6> paths;  // each includes its endpoints
};

std::optional<K4Subdivision> contains_k4_subdivision(const SimpleGraph& g);
bool validate_k4_subdivision(const SimpleGraph& g, const K4Subdivision& s);

// All simple cycles of g, each reported once as a vertex sequence whose first
// vertex is the smallest on the cycle.  Deterministic order.
std::vector<std::vector<int>> all_cycles(const SimpleGraph& g);

}  // namespace satspec
