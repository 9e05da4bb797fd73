#include "satspec/cycles.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace satspec {

namespace {

uint64_t bit(int v) { return uint64_t{1} << v; }

uint64_t mask_of(const std::vector<int>& vs) {
  uint64_t m = 0;
  for (int v : vs) m |= bit(v);
  return m;
}

// Enumerates the chordless cycles through `start` inside `alive`, in DFS
// order with ascending neighbor choices.  The visitor returns true to stop.
// Grown paths are induced; a candidate adjacent to `start` closes a cycle and
// is never extended (the closing edge would be a chord of anything longer).
// Each cycle is seen once: the second vertex must be smaller than the last.
struct ChordlessCycles {
  const SimpleGraph& g;
  uint64_t alive;
  int start;
  std::vector<int> path;
  uint64_t path_mask = 0;
  uint64_t banned = 0;  // neighbors of internal path vertices

  ChordlessCycles(const SimpleGraph& graph, uint64_t alive_mask, int start_vertex)
      : g(graph), alive(alive_mask), start(start_vertex) {}

  template <typename Fn>
  bool enumerate(Fn&& fn) {
    path.assign(1, start);
    path_mask = bit(start);
    banned = 0;
    return extend(fn);
  }

  template <typename Fn>
  bool extend(Fn&& fn) {
    int last = path.back();
    uint64_t cand = g.row(last) & alive & ~path_mask & ~banned & ~bit(start);
    uint64_t start_adj = g.row(start);
    bool growing_first = path.size() == 1;  // next vertex is the cycle's second
    while (cand) {
      int y = std::countr_zero(cand);
      cand &= cand - 1;
      if (!growing_first && ((start_adj >> y) & 1)) {
        if (path[1] < y) {
          path.push_back(y);
          bool stop = fn(path);
          path.pop_back();
          if (stop) return true;
        }
        continue;  // closing vertex, never an interior
      }
      uint64_t saved_banned = banned;
      if (path.size() >= 2) banned |= g.row(last);
      path.push_back(y);
      path_mask |= bit(y);
      bool stop = extend(fn);
      path_mask &= ~bit(y);
      path.pop_back();
      banned = saved_banned;
      if (stop) return true;
    }
    return false;
  }
};

// Shaves vertices of alive-degree < 2; they lie on no cycle.
uint64_t peel(const SimpleGraph& g, uint64_t alive) {
  bool changed = true;
  while (changed) {
    changed = false;
    uint64_t m = alive;
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      if (std::popcount(g.row(v) & alive) < 2) {
        alive &= ~bit(v);
        changed = true;
      }
    }
  }
  return alive;
}

struct PackingSearch {
  const SimpleGraph& g;
  int target;  // -1: maximize; otherwise stop as soon as target is reached
  int best_count = -1;
  std::vector<std::vector<int>> current;
  CyclePacking best;
  bool done = false;

  PackingSearch(const SimpleGraph& graph, int tgt) : g(graph), target(tgt) {}

  void search(uint64_t alive, int count) {
    if (done) return;
    alive = peel(g, alive);
    if (count > best_count) {
      best_count = count;
      best.cycles = current;
      if (target >= 0 && count >= target) {
        done = true;
        return;
      }
    }
    int need = (target >= 0 ? target : best_count + 1) - count;
    if (std::popcount(alive) < 3 * need) return;

    int pivot = -1, pivot_deg = kMaxVertices + 1;
    uint64_t m = alive;
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      int d = std::popcount(g.row(v) & alive);
      if (d < pivot_deg) {
        pivot_deg = d;
        pivot = v;
      }
    }

    ChordlessCycles cc{g, alive, pivot};
    cc.enumerate([&](const std::vector<int>& cycle) {
      current.push_back(cycle);
      search(alive & ~mask_of(cycle), count + 1);
      current.pop_back();
      return done;
    });
    if (done) return;
    search(alive & ~bit(pivot), count);
  }
};

}  // namespace

bool validate_cycle(const SimpleGraph& g, const std::vector<int>& cycle) {
  if (cycle.size() < 3) return false;
  uint64_t seen = 0;
  for (int v : cycle) {
    if (v < 0 || v >= g.n() || (seen & bit(v))) return false;
    seen |= bit(v);
  }
  for (size_t i = 0; i < cycle.size(); ++i) {
    if (!g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  }
  return true;
}

bool validate_packing(const SimpleGraph& g, const CyclePacking& p) {
  uint64_t used = 0;
  for (const auto& c : p.cycles) {
    if (!validate_cycle(g, c)) return false;
    uint64_t m = mask_of(c);
    if (used & m) return false;
    used |= m;
  }
  return true;
}

std::pair<int, CyclePacking> max_disjoint_cycles(const SimpleGraph& g) {
  PackingSearch s(g, -1);
  s.search(g.vertex_mask(), 0);
  return {s.best_count, s.best};
}

std::optional<CyclePacking> has_k_disjoint_cycles(const SimpleGraph& g, int k) {
  return has_k_disjoint_cycles_in(g, g.vertex_mask(), k);
}

std::optional<CyclePacking> has_k_disjoint_cycles_in(const SimpleGraph& g, uint64_t alive, int k) {
  if (k < 0) throw std::invalid_argument("has_k_disjoint_cycles: k must be >= 0");
  if (k == 0) return CyclePacking{};
  PackingSearch s(g, k);
  s.search(alive & g.vertex_mask(), 0);
  if (s.best_count >= k) return s.best;
  return std::nullopt;
}

namespace {

struct PathSearch {
  const SimpleGraph& g;
  int v, c, min_vertices;
  std::vector<int> path;
  uint64_t path_mask = 0;
  std::optional<PathWithPacking> result;

  PathSearch(const SimpleGraph& graph, int target, int cycles, int min_verts)
      : g(graph), v(target), c(cycles), min_vertices(min_verts) {}

  void dfs() {
    if (result) return;
    int last = path.back();
    if (last == v && static_cast<int>(path.size()) >= min_vertices) {
      if (auto packing = has_k_disjoint_cycles_in(g, g.vertex_mask() & ~path_mask, c)) {
        result = PathWithPacking{path, *packing};
      }
      return;  // v is an endpoint; extending would make it internal
    }
    if (last == v) return;
    if (g.n() - static_cast<int>(path.size()) < 3 * c) return;
    uint64_t cand = g.row(last) & ~path_mask;
    while (cand) {
      int y = std::countr_zero(cand);
      cand &= cand - 1;
      path.push_back(y);
      path_mask |= bit(y);
      dfs();
      path_mask &= ~bit(y);
      path.pop_back();
      if (result) return;
    }
  }
};

}  // namespace

std::optional<PathWithPacking> path_with_residual_packing(const SimpleGraph& g, int u, int v,
                                                          int c, int min_path_vertices) {
  if (u < 0 || u >= g.n() || v < 0 || v >= g.n()) {
    throw std::invalid_argument("path_with_residual_packing: endpoint out of range");
  }
  if (c < 0) throw std::invalid_argument("path_with_residual_packing: c must be >= 0");
  PathSearch s(g, v, c, min_path_vertices);
  s.path = {u};
  s.path_mask = bit(u);
  if (u == v) {
    // Only the one-vertex path is a u-u path.
    if (min_path_vertices <= 1) {
      if (auto packing = has_k_disjoint_cycles_in(g, g.vertex_mask() & ~bit(u), c)) {
        return PathWithPacking{{u}, *packing};
      }
    }
    return std::nullopt;
  }
  s.dfs();
  return s.result;
}

namespace {

constexpr int kPairFirst[6] = {0, 0, 0, 1, 1, 2};
constexpr int kPairSecond[6] = {1, 2, 3, 2, 3, 3};

struct K4Search {
  const SimpleGraph& g;
  std::array<int, 4> branch{};
  uint64_t branch_mask = 0;
  uint64_t interior_used = 0;
  std::array<std::vector<int>, 6> paths;

  explicit K4Search(const SimpleGraph& graph) : g(graph) {}

  bool assign(int pair_idx) {
    if (pair_idx == 6) return true;
    int s = branch[kPairFirst[pair_idx]];
    int t = branch[kPairSecond[pair_idx]];
    std::vector<int> path{s};
    uint64_t local = 0;
    return grow(pair_idx, t, path, local);
  }

  bool grow(int pair_idx, int t, std::vector<int>& path, uint64_t& local) {
    int last = path.back();
    if (g.has_edge(last, t)) {
      path.push_back(t);
      paths[pair_idx] = path;
      interior_used |= local;
      if (assign(pair_idx + 1)) return true;
      interior_used &= ~local;
      path.pop_back();
    }
    uint64_t cand = g.row(last) & ~branch_mask & ~interior_used & ~local;
    while (cand) {
      int y = std::countr_zero(cand);
      cand &= cand - 1;
      path.push_back(y);
      local |= bit(y);
      if (grow(pair_idx, t, path, local)) return true;
      local &= ~bit(y);
      path.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<K4Subdivision> contains_k4_subdivision(const SimpleGraph& g) {
  std::vector<int> cands;
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) >= 3) cands.push_back(v);
  }
  int nc = static_cast<int>(cands.size());
  if (nc < 4) return std::nullopt;
  for (int a = 0; a < nc; ++a)
    for (int b = a + 1; b < nc; ++b)
      for (int c = b + 1; c < nc; ++c)
        for (int d = c + 1; d < nc; ++d) {
          K4Search s(g);
          s.branch = {cands[a], cands[b], cands[c], cands[d]};
          s.branch_mask = bit(cands[a]) | bit(cands[b]) | bit(cands[c]) | bit(cands[d]);
          if (s.assign(0)) {
            K4Subdivision out;
            out.branch = s.branch;
            out.paths = s.paths;
            return out;
          }
        }
  return std::nullopt;
}

bool validate_k4_subdivision(const SimpleGraph& g, const K4Subdivision& s) {
  uint64_t branch_mask = 0;
  for (int v : s.branch) {
    if (v < 0 || v >= g.n() || (branch_mask & bit(v))) return false;
    branch_mask |= bit(v);
  }
  uint64_t interior = 0;
  for (int p = 0; p < 6; ++p) {
    const auto& path = s.paths[p];
    if (path.size() < 2) return false;
    if (path.front() != s.branch[kPairFirst[p]] || path.back() != s.branch[kPairSecond[p]]) {
      return false;
    }
    for (size_t i = 0; i + 1 < path.size(); ++i) {
      if (!g.has_edge(path[i], path[i + 1])) return false;
    }
    for (size_t i = 1; i + 1 < path.size(); ++i) {
      int v = path[i];
      if (v < 0 || v >= g.n()) return false;
      if ((branch_mask | interior) & bit(v)) return false;
      interior |= bit(v);
    }
  }
  return true;
}

std::vector<std::vector<int>> all_cycles(const SimpleGraph& g) {
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  uint64_t path_mask = 0;

  // Cycles are rooted at their smallest vertex; orientation is fixed by
  // requiring the second vertex to be smaller than the last.
  auto dfs = [&](auto&& self, int root) -> void {
    int last = path.back();
    uint64_t cand = g.row(last) & ~path_mask;
    // only vertices above the root may appear after it
    cand &= ~((bit(root) << 1) - 1);
    while (cand) {
      int y = std::countr_zero(cand);
      cand &= cand - 1;
      if (path.size() >= 2 && g.has_edge(y, root) && path[1] < y) {
        path.push_back(y);
        out.push_back(path);
        path.pop_back();
      }
      path.push_back(y);
      path_mask |= bit(y);
      self(self, root);
      path_mask &= ~bit(y);
      path.pop_back();
    }
  };

  for (int root = 0; root < g.n(); ++root) {
    path.assign(1, root);
    path_mask = bit(root);
    dfs(dfs, root);
  }
  return out;
}

}  // namespace satspec
