#include "satspec/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace satspec {

namespace {

uint64_t bit(int v) { return uint64_t{1} << v; }

// Depth-first minimization of the column-major triangle bit string over all
// vertex orderings.  At level j the candidate's "column" holds its adjacency
// bits against the placed prefix, first-placed vertex most significant, so
// integer comparison of columns is lexicographic comparison of the bits.
//
// best_cols acts as the incumbent: a candidate column greater than the
// incumbent at its level is pruned; a smaller one overwrites the incumbent
// and resets the deeper levels.  Vertices whose swap is an automorphism
// (twins) are tried at most once per node.
struct Canonizer {
  int n;
  std::array<uint64_t, kMaxVertices> rows{};
  std::array<uint64_t, kMaxVertices> twin{};
  std::array<uint64_t, kMaxVertices> cols{};
  std::array<uint64_t, kMaxVertices> best_cols{};
  std::array<int, kMaxVertices> perm{};
  std::array<int, kMaxVertices> best_perm{};
  uint64_t used = 0;

  explicit Canonizer(const SimpleGraph& g) : n(g.n()) {
    for (int v = 0; v < n; ++v) rows[v] = g.row(v);
    for (int v = 0; v < n; ++v) {
      uint64_t m = 0;
      for (int w = 0; w < n; ++w) {
        if (w == v) continue;
        uint64_t outside = ~(bit(v) | bit(w));
        if ((rows[v] & outside) == (rows[w] & outside)) m |= bit(w);
      }
      twin[v] = m;
    }
    best_cols.fill(~uint64_t{0});
  }

  void run() {
    if (n == 0) return;
    dfs(0);
  }

  void dfs(int level) {
    if (level == n) {
      best_perm = perm;
      return;
    }
    std::array<std::pair<uint64_t, int>, kMaxVertices> cand;
    int nc = 0;
    for (int v = 0; v < n; ++v) {
      if (!((used >> v) & 1)) cand[nc++] = {cols[v], v};
    }
    std::sort(cand.begin(), cand.begin() + nc);

    uint64_t tried = 0;
    for (int idx = 0; idx < nc; ++idx) {
      auto [col, v] = cand[idx];
      if (col > best_cols[level]) break;
      if (tried & twin[v]) continue;
      tried |= bit(v);
      if (col < best_cols[level]) {
        best_cols[level] = col;
        for (int j = level + 1; j < n; ++j) best_cols[j] = ~uint64_t{0};
      }
      perm[level] = v;
      used |= bit(v);
      uint64_t rest = ~used;
      for (int w = 0; w < n; ++w) {
        if ((rest >> w) & 1) cols[w] = (cols[w] << 1) | ((rows[w] >> v) & 1);
      }
      dfs(level + 1);
      for (int w = 0; w < n; ++w) {
        if ((rest >> w) & 1) cols[w] >>= 1;
      }
      used &= ~bit(v);
    }
  }
};

}  // namespace

CanonicalLabeling canonicalize(const SimpleGraph& g) {
  Canonizer c(g);
  c.run();
  CanonicalLabeling out;
  out.perm.assign(c.best_perm.begin(), c.best_perm.begin() + g.n());
  out.graph = relabel(g, out.perm);
  return out;
}

CanonicalForm canonical_form(const SimpleGraph& g) {
  SimpleGraph cg = canonicalize(g).graph;
  return CanonicalForm{cg.n(), cg.triangle_bits()};
}

SimpleGraph canonical_graph(const SimpleGraph& g) { return canonicalize(g).graph; }

bool is_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
  std::array<int, kMaxVertices + 1> da{}, db{};
  for (int v = 0; v < a.n(); ++v) {
    ++da[a.degree(v)];
    ++db[b.degree(v)];
  }
  if (da != db) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace satspec
