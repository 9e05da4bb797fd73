#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "satspec/cycles.hpp"
#include "satspec/graph.hpp"

namespace satspec {

enum class SatVerdict { Saturated, ContainsFamily, NotSaturated };

// Per-non-edge certificate: adding uv creates this packing of k cycles.
struct NonEdgeWitness {
  int u = 0;
  int v = 0;
  CyclePacking packing;  // valid in G + uv
};

// Exact verdict for (G, k) with auditable certificates.
//  - ContainsFamily: family_witness packs k cycles in G itself.
//  - NotSaturated: offending_non_edge admits no packing in G + e
//    (the exact search was exhausted).
//  - Saturated: one witness per non-edge, in lexicographic order; complete
//    graphs without k disjoint cycles are saturated with an empty map.
struct SaturationReport {
  SatVerdict verdict = SatVerdict::NotSaturated;
  int k = 0;
  std::optional<CyclePacking> family_witness;
  std::optional<std::pair<int, int>> offending_non_edge;
  std::vector<NonEdgeWitness> witnesses;
};

SaturationReport saturation_status(const SimpleGraph& g, int k);
bool is_saturated(const SimpleGraph& g, int k);

// 2-connected and already its own minimal base (no leaf strips or
// suppressions fire).
bool is_good(const SimpleGraph& g);

}  // namespace satspec
