#include "satspec/json_io.hpp"

#include <stdexcept>

#include <json.hpp>

#include "satspec/graph6.hpp"

namespace satspec {

namespace {

using nlohmann::json;

json cycles_json(const std::vector<std::vector<int>>& cycles) {
  json arr = json::array();
  for (const auto& c : cycles) arr.push_back(c);
  return arr;
}

std::string dump(const json& j, int indent) {
  return (indent >= 0 ? j.dump(indent) : j.dump()) + "\n";
}

}  // namespace

std::string saturation_report_to_json(const SimpleGraph& g, const SaturationReport& report,
                                      int indent) {
  json j;
  j["graph6"] = emit_graph6(g);
  j["n"] = g.n();
  j["m"] = g.edge_count();
  j["k"] = report.k;
  switch (report.verdict) {
    case SatVerdict::Saturated: {
      j["verdict"] = "Saturated";
      json wit = json::array();
      for (const auto& w : report.witnesses) {
        if (!validate_packing(g.with_edge(w.u, w.v), w.packing) ||
            w.packing.size() != report.k) {
          throw std::logic_error("saturation witness failed re-validation");
        }
        wit.push_back({{"u", w.u}, {"v", w.v}, {"cycles", cycles_json(w.packing.cycles)}});
      }
      j["witnesses"] = wit;
      break;
    }
    case SatVerdict::ContainsFamily: {
      j["verdict"] = "ContainsFamily";
      if (!report.family_witness || !validate_packing(g, *report.family_witness)) {
        throw std::logic_error("family witness failed re-validation");
      }
      j["packing"] = cycles_json(report.family_witness->cycles);
      break;
    }
    case SatVerdict::NotSaturated: {
      j["verdict"] = "NotSaturated";
      j["non_edge"] = {report.offending_non_edge->first, report.offending_non_edge->second};
      j["search_exhausted"] = true;
      break;
    }
  }
  return dump(j, indent);
}

std::string packing_to_json(const SimpleGraph& g, int count, const CyclePacking& packing,
                            int indent) {
  if (!validate_packing(g, packing) || packing.size() != count) {
    throw std::logic_error("packing failed re-validation");
  }
  json j;
  j["graph6"] = emit_graph6(g);
  j["count"] = count;
  j["cycles"] = cycles_json(packing.cycles);
  return dump(j, indent);
}

namespace {

json trace_json(const ReductionTrace& trace) {
  json steps = json::array();
  for (const auto& s : trace.steps) {
    if (s.kind == ReductionStep::Kind::LeafDelete) {
      steps.push_back({{"op", "leaf_delete"}, {"v", s.v}});
    } else {
      steps.push_back({{"op", "suppress"}, {"v", s.v}, {"u1", s.u1}, {"u2", s.u2}});
    }
  }
  json j;
  j["steps"] = steps;
  j["survivors"] = trace.survivors;
  return j;
}

}  // namespace

std::string reduction_to_json(const SimpleGraph& g, const ReductionTrace& m0,
                              const ReductionTrace& m, int indent) {
  json j;
  j["graph6"] = emit_graph6(g);
  j["m0"] = emit_graph6(m0.output);
  j["m"] = emit_graph6(m.output);
  j["m0_trace"] = trace_json(m0);
  j["m_trace"] = trace_json(m);
  return dump(j, indent);
}

std::string verify_report_to_json(const VerifyReport& report, int indent) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    json jc;
    jc["name"] = c.name;
    jc["pass"] = c.pass;
    jc["report_only"] = c.report_only;
    jc["details"] = c.details;
    jc["counterexamples"] = c.counterexamples;
    checks.push_back(jc);
  }
  json j;
  j["n_max"] = report.n_max;
  j["k_set"] = report.k_set;
  j["all_pass"] = report.all_pass();
  j["checks"] = checks;
  return dump(j, indent);
}

}  // namespace satspec
