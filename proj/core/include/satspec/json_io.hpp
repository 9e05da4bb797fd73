#pragma once

#include <string>

#include "satspec/cycles.hpp"
#include "satspec/graph.hpp"
#include "satspec/reduction.hpp"
#include "satspec/saturation.hpp"
#include "satspec/verify.hpp"

namespace satspec {

// JSON payloads for the CLI; keys are stable and sorted for byte-stable
// output.  Each serializer re-validates the certificates it emits.

std::string saturation_report_to_json(const SimpleGraph& g, const SaturationReport& report,
                                      int indent = -1);
std::string packing_to_json(const SimpleGraph& g, int count, const CyclePacking& packing,
                            int indent = -1);
std::string reduction_to_json(const SimpleGraph& g, const ReductionTrace& m0,
                              const ReductionTrace& m, int indent = -1);
std::string verify_report_to_json(const VerifyReport& report, int indent = -1);

}  // namespace satspec
