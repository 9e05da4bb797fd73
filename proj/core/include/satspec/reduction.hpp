#pragma once

#include <vector>

#include "satspec/graph.hpp"

namespace satspec {

// One reduction move, in original vertex labels.  LeafDelete removes a
// degree-1 vertex; Suppress removes a degree-2 vertex v whose neighbors
// u1, u2 were non-adjacent at the time and adds the edge u1u2.
struct ReductionStep {
  enum class Kind { LeafDelete, Suppress };
  Kind kind;
  int v;
  int u1 = -1;
  int u2 = -1;
};

// Certificate tying a graph to its reduced form.  Replaying the steps on the
// input and compacting onto the surviving vertices (ascending original
// labels) reproduces the output.
struct ReductionTrace {
  SimpleGraph input;
  std::vector<ReductionStep> steps;
  std::vector<int> survivors;  // original labels, ascending
  SimpleGraph output;
};

// M0: iteratively delete degree-1 vertices (lowest label first) until none
// remain.  Isolated vertices stay.
ReductionTrace strip_leaves(const SimpleGraph& g);

// M: strip leaves, then repeatedly suppress any degree-2 vertex whose two
// neighbors are non-adjacent (lowest label first).  In the output every
// degree-2 vertex has adjacent neighbors.
ReductionTrace minimal_base(const SimpleGraph& g);

// Replays trace.steps on trace.input; throws if a step is invalid.
SimpleGraph replay_trace(const ReductionTrace& trace);

// S_uv: replace the edge uv by a path u-w-v through a new vertex w = n.
SimpleGraph subdivide_edge(const SimpleGraph& g, int u, int v);

// True iff h can be obtained from g by replacing edges with internally
// disjoint paths (of one or more edges).  Exact; fast when |V(g)| <= 8.
bool is_subdivision_of(const SimpleGraph& h, const SimpleGraph& g);

}  // namespace satspec
