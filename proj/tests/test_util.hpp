#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "satspec/graph.hpp"

namespace testutil {

inline satspec::SimpleGraph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return satspec::SimpleGraph::from_edges(n, edges);
}

inline std::vector<int> random_permutation(std::mt19937& rng, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline satspec::SimpleGraph random_tree(std::mt19937& rng, int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    edges.emplace_back(pick(rng), v);
  }
  return satspec::SimpleGraph::from_edges(n, edges);
}

inline satspec::SimpleGraph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(0, n - 1);
  return satspec::SimpleGraph::from_edges(n, edges);
}

inline satspec::SimpleGraph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return satspec::SimpleGraph::from_edges(n, edges);
}

}  // namespace testutil
