#include "satspec/reduction.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

namespace satspec {

namespace {

uint64_t bit(int v) { return uint64_t{1} << v; }

// Mutable view used while reducing: adjacency rows under original labels
// plus an alive mask.
struct Workspace {
  std::array<uint64_t, kMaxVertices> rows{};
  uint64_t alive = 0;
  int n = 0;

  explicit Workspace(const SimpleGraph& g) : n(g.n()) {
    for (int v = 0; v < n; ++v) rows[v] = g.row(v);
    alive = g.vertex_mask();
  }

  int degree(int v) const { return std::popcount(rows[v] & alive); }

  void delete_vertex(int v) {
    alive &= ~bit(v);
    uint64_t nb = rows[v] & alive;
    while (nb) {
      int u = std::countr_zero(nb);
      nb &= nb - 1;
      rows[u] &= ~bit(v);
    }
    rows[v] = 0;
  }

  void add_edge(int u, int v) {
    rows[u] |= bit(v);
    rows[v] |= bit(u);
  }

  SimpleGraph compact(std::vector<int>& survivors) const {
    survivors.clear();
    std::array<int, kMaxVertices> idx{};
    for (int v = 0; v < n; ++v) {
      if ((alive >> v) & 1) {
        idx[v] = static_cast<int>(survivors.size());
        survivors.push_back(v);
      }
    }
    std::vector<std::pair<int, int>> edges;
    for (int v : survivors) {
      uint64_t nb = rows[v] & alive;
      while (nb) {
        int u = std::countr_zero(nb);
        nb &= nb - 1;
        if (u > v) edges.emplace_back(idx[v], idx[u]);
      }
    }
    return SimpleGraph::from_edges(static_cast<int>(survivors.size()), edges);
  }
};

void strip_leaves_in(Workspace& ws, std::vector<ReductionStep>& steps) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < ws.n; ++v) {
      if (((ws.alive >> v) & 1) && ws.degree(v) == 1) {
        steps.push_back({ReductionStep::Kind::LeafDelete, v});
        ws.delete_vertex(v);
        changed = true;
      }
    }
  }
}

void suppress_in(Workspace& ws, std::vector<ReductionStep>& steps) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < ws.n; ++v) {
      if (!((ws.alive >> v) & 1) || ws.degree(v) != 2) continue;
      uint64_t nb = ws.rows[v] & ws.alive;
      int u1 = std::countr_zero(nb);
      int u2 = std::countr_zero(nb & (nb - 1));
      if ((ws.rows[u1] >> u2) & 1) continue;  // neighbors adjacent: keep v
      steps.push_back({ReductionStep::Kind::Suppress, v, u1, u2});
      ws.delete_vertex(v);
      ws.add_edge(u1, u2);
      changed = true;
    }
  }
}

ReductionTrace finish(const SimpleGraph& g, Workspace& ws, std::vector<ReductionStep> steps) {
  ReductionTrace trace;
  trace.input = g;
  trace.steps = std::move(steps);
  trace.output = ws.compact(trace.survivors);
  return trace;
}

}  // namespace

ReductionTrace strip_leaves(const SimpleGraph& g) {
  Workspace ws(g);
  std::vector<ReductionStep> steps;
  strip_leaves_in(ws, steps);
  return finish(g, ws, std::move(steps));
}

ReductionTrace minimal_base(const SimpleGraph& g) {
  Workspace ws(g);
  std::vector<ReductionStep> steps;
  strip_leaves_in(ws, steps);
  suppress_in(ws, steps);
  return finish(g, ws, std::move(steps));
}

SimpleGraph replay_trace(const ReductionTrace& trace) {
  Workspace ws(trace.input);
  for (const auto& step : trace.steps) {
    if (!((ws.alive >> step.v) & 1)) throw std::runtime_error("trace: dead vertex");
    if (step.kind == ReductionStep::Kind::LeafDelete) {
      if (ws.degree(step.v) != 1) throw std::runtime_error("trace: not a leaf");
      ws.delete_vertex(step.v);
    } else {
      if (ws.degree(step.v) != 2) throw std::runtime_error("trace: not degree 2");
      uint64_t nb = ws.rows[step.v] & ws.alive;
      if (nb != (bit(step.u1) | bit(step.u2))) throw std::runtime_error("trace: wrong neighbors");
      if ((ws.rows[step.u1] >> step.u2) & 1) throw std::runtime_error("trace: chord present");
      ws.delete_vertex(step.v);
      ws.add_edge(step.u1, step.u2);
    }
  }
  std::vector<int> survivors;
  return ws.compact(survivors);
}

SimpleGraph subdivide_edge(const SimpleGraph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.n() || v >= g.n() || !g.has_edge(u, v)) {
    throw std::invalid_argument("subdivide_edge: uv is not an edge");
  }
  int w = g.n();
  SimpleGraph out = g.with_new_vertex(bit(u) | bit(v));
  (void)w;
  return out.without_edge(u, v);
}

namespace {

// Assignment search for h in S(g): injectively map g's vertices to h-vertices
// of equal degree, then route every g-edge as a forced walk through unused
// non-image degree-2 vertices.  At the end every vertex and edge of h must be
// consumed.
struct SubdivisionSearch {
  const SimpleGraph& h;
  const SimpleGraph& g;
  std::vector<int> image;          // g vertex -> h vertex
  uint64_t image_mask = 0;
  uint64_t interior_used = 0;
  std::vector<std::pair<int, int>> gedges;
  int edges_used = 0;
  std::vector<uint64_t> used_at;  // per h-vertex: mask of used incident edges

  SubdivisionSearch(const SimpleGraph& hh, const SimpleGraph& gg) : h(hh), g(gg) {
    image.assign(g.n(), -1);
    gedges = g.edges();
    used_at.assign(h.n(), 0);
  }

  bool edge_used(int a, int b) const { return (used_at[a] >> b) & 1; }
  void mark_edge(int a, int b, bool on) {
    if (on) {
      used_at[a] |= bit(b);
      used_at[b] |= bit(a);
    } else {
      used_at[a] &= ~bit(b);
      used_at[b] &= ~bit(a);
    }
  }

  bool run() {
    if (h.edge_count() - h.n() != g.edge_count() - g.n()) return false;
    if (h.n() < g.n()) return false;
    return place(0);
  }

  bool place(int gv) {
    if (gv == g.n()) return route(0);
    int want = g.degree(gv);
    for (int hv = 0; hv < h.n(); ++hv) {
      if ((image_mask >> hv) & 1) continue;
      if (h.degree(hv) != want) continue;
      image[gv] = hv;
      image_mask |= bit(hv);
      if (place(gv + 1)) return true;
      image_mask &= ~bit(hv);
    }
    image[gv] = -1;
    return false;
  }

  bool route(int ei) {
    if (ei == static_cast<int>(gedges.size())) {
      // all of h must be consumed
      return std::popcount(image_mask | interior_used) == h.n() &&
             edges_used == h.edge_count();
    }
    int s = image[gedges[ei].first];
    int t = image[gedges[ei].second];
    uint64_t nb = h.row(s);
    while (nb) {
      int first = std::countr_zero(nb);
      nb &= nb - 1;
      if (edge_used(s, first)) continue;
      if (try_walk(ei, s, t, first)) return true;
    }
    return false;
  }

  // The walk is forced: interior vertices are non-image degree-2 vertices, so
  // after entering one there is exactly one way out.
  bool try_walk(int ei, int s, int t, int first) {
    std::vector<int> walk{s, first};
    int prev = s, cur = first;
    uint64_t local = 0;
    while (true) {
      if ((image_mask >> cur) & 1) break;     // reached a branch image
      if (h.degree(cur) != 2) return false;   // cannot be an interior vertex
      if ((interior_used | local) & bit(cur)) return false;
      local |= bit(cur);
      uint64_t nbm = h.row(cur) & ~bit(prev);
      if (nbm == 0) return false;
      prev = cur;
      cur = std::countr_zero(nbm);
      if (edge_used(prev, cur)) return false;
      walk.push_back(cur);
    }
    if (cur != t) return false;
    for (size_t i = 0; i + 1 < walk.size(); ++i) mark_edge(walk[i], walk[i + 1], true);
    interior_used |= local;
    edges_used += static_cast<int>(walk.size()) - 1;
    if (route(ei + 1)) return true;
    edges_used -= static_cast<int>(walk.size()) - 1;
    interior_used &= ~local;
    for (size_t i = 0; i + 1 < walk.size(); ++i) mark_edge(walk[i], walk[i + 1], false);
    return false;
  }
};

}  // namespace

bool is_subdivision_of(const SimpleGraph& h, const SimpleGraph& g) {
  if (g.n() == 0) return h.n() == 0;
  SubdivisionSearch s(h, g);
  return s.run();
}

}  // namespace satspec
