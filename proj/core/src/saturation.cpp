#include "satspec/saturation.hpp"

#include <stdexcept>

#include "satspec/blocks.hpp"
#include "satspec/reduction.hpp"

namespace satspec {

SaturationReport saturation_status(const SimpleGraph& g, int k) {
  if (k < 1) throw std::invalid_argument("saturation_status: k must be >= 1");
  SaturationReport report;
  report.k = k;
  if (auto packing = has_k_disjoint_cycles(g, k)) {
    report.verdict = SatVerdict::ContainsFamily;
    report.family_witness = std::move(*packing);
    return report;
  }
  for (auto [u, v] : g.non_edges()) {
    auto packing = has_k_disjoint_cycles(g.with_edge(u, v), k);
    if (!packing) {
      report.verdict = SatVerdict::NotSaturated;
      report.offending_non_edge = {u, v};
      report.witnesses.clear();
      return report;
    }
    report.witnesses.push_back({u, v, std::move(*packing)});
  }
  report.verdict = SatVerdict::Saturated;
  return report;
}

bool is_saturated(const SimpleGraph& g, int k) {
  return saturation_status(g, k).verdict == SatVerdict::Saturated;
}

bool is_good(const SimpleGraph& g) {
  if (!is_biconnected(g)) return false;
  return minimal_base(g).steps.empty();
}

}  // namespace satspec
