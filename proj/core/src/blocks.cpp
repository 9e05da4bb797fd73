#include "satspec/blocks.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace satspec {

namespace {

struct BlockFinder {
  const SimpleGraph& g;
  std::vector<int> disc, low, parent;
  std::vector<bool> cut;
  std::vector<std::pair<int, int>> edge_stack;
  std::vector<std::vector<int>> block_sets;
  int timer = 0;

  explicit BlockFinder(const SimpleGraph& graph)
      : g(graph),
        disc(graph.n(), 0),
        low(graph.n(), 0),
        parent(graph.n(), -1),
        cut(graph.n(), false) {}

  void pop_block(int u, int v) {
    std::set<int> verts;
    while (true) {
      auto e = edge_stack.back();
      edge_stack.pop_back();
      verts.insert(e.first);
      verts.insert(e.second);
      if (e.first == u && e.second == v) break;
    }
    block_sets.emplace_back(verts.begin(), verts.end());
  }

  void dfs(int u) {
    disc[u] = low[u] = ++timer;
    int children = 0;
    uint64_t nb = g.row(u);
    while (nb) {
      int v = std::countr_zero(nb);
      nb &= nb - 1;
      if (disc[v] == 0) {
        ++children;
        parent[v] = u;
        edge_stack.emplace_back(u, v);
        dfs(v);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          if (parent[u] != -1) cut[u] = true;
          pop_block(u, v);
        }
      } else if (v != parent[u] && disc[v] < disc[u]) {
        edge_stack.emplace_back(u, v);
        low[u] = std::min(low[u], disc[v]);
      }
    }
    if (parent[u] == -1 && children >= 2) cut[u] = true;
  }
};

}  // namespace

BlockDecomposition blocks(const SimpleGraph& g) {
  BlockFinder finder(g);
  for (int v = 0; v < g.n(); ++v) {
    if (finder.disc[v] == 0) finder.dfs(v);
  }

  BlockDecomposition out;
  for (auto& verts : finder.block_sets) {
    Block b;
    b.vertices = std::move(verts);
    b.trivial = b.vertices.size() == 2;
    out.blocks.push_back(std::move(b));
  }
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const Block& a, const Block& b) { return a.vertices < b.vertices; });
  for (int v = 0; v < g.n(); ++v) {
    if (finder.cut[v]) out.cut_vertices.push_back(v);
  }
  return out;
}

bool is_biconnected(const SimpleGraph& g) {
  if (g.n() < 3 || !is_connected(g)) return false;
  return blocks(g).cut_vertices.empty();
}

}  // namespace satspec
