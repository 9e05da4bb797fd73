#include "satspec/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace satspec {

namespace {

[[noreturn]] void bad_param(const std::string& what) { throw std::invalid_argument(what); }

}  // namespace

SimpleGraph complete_graph(int r) {
  if (r < 1) bad_param("complete_graph: r must be >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < r; ++u)
    for (int v = u + 1; v < r; ++v) edges.emplace_back(u, v);
  return SimpleGraph::from_edges(r, edges);
}

SimpleGraph star_join(int n, int t) {
  if (t < 1 || t > n - 2) bad_param("star_join: need 1 <= t <= n-2");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < t; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return SimpleGraph::from_edges(n, edges);
}

SimpleGraph wheel(int n) {
  if (n < 5) bad_param("wheel: need n >= 5");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  for (int v = 1; v < n - 1; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(1, n - 1);
  return SimpleGraph::from_edges(n, edges);
}

SimpleGraph wheel_plus(int n, int p) {
  if (n < 5 || p < 1) bad_param("wheel_plus: need n >= 5 and p >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  for (int v = 1; v < n - 1; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(1, n - 1);
  edges.emplace_back(0, n);                  // hub to the first path vertex
  for (int v = n; v < n + p - 1; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(1, n + p - 1);          // last path vertex back to the rim
  return SimpleGraph::from_edges(n + p, edges);
}

SimpleGraph generalized_wheel(int n, int t) {
  if (t < 1 || n < t + 4) bad_param("generalized_wheel: need t >= 1 and n >= t+4");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < t; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  for (int v = t; v < n - 1; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(t, n - 1);
  return SimpleGraph::from_edges(n, edges);
}

SimpleGraph spider_join(int n, int t) {
  if (t < 1 || n < 3 * t + 5) bad_param("spider_join: need t >= 1 and n >= 3t+5");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < t; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  int center = t;
  for (int leg = 0; leg <= t; ++leg) {  // t+1 legs on three vertices
    int mid = t + 1 + 2 * leg;
    int end = mid + 1;
    edges.emplace_back(center, mid);
    edges.emplace_back(mid, end);
  }
  int prev = center;  // long leg: a path on n-3t-2 vertices ending at the center
  for (int v = 3 * t + 3; v < n; ++v) {
    edges.emplace_back(prev, v);
    prev = v;
  }
  return SimpleGraph::from_edges(n, edges);
}

SimpleGraph build_family(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilySpec::Kind::CompleteK:
      return complete_graph(spec.a);
    case FamilySpec::Kind::Star:
      return star_join(spec.a, spec.b);
    case FamilySpec::Kind::Wheel:
      return wheel(spec.a);
    case FamilySpec::Kind::WheelPlus:
      return wheel_plus(spec.a, spec.b);
    case FamilySpec::Kind::GenWheel:
      return generalized_wheel(spec.a, spec.b);
    case FamilySpec::Kind::Spider:
      return spider_join(spec.a, spec.b);
  }
  bad_param("build_family: unknown family");
}

int BlockStarSpec::block_count() const {
  int c = 0;
  for (const auto& b : complete_blocks) c += b.count;
  for (const auto& b : wheel_plus_blocks) c += b.count;
  for (const auto& b : star_blocks) c += b.count;
  return c;
}

int BlockStarSpec::target_k() const {
  int k = 1;
  for (const auto& b : complete_blocks) k += (b.i - 1) * b.count;
  for (const auto& b : wheel_plus_blocks) k += b.count;
  for (const auto& b : star_blocks) k += (b.j - 1) * b.count;
  return k;
}

int BlockStarSpec::vertex_count() const {
  int n = 1;
  for (const auto& b : complete_blocks) n += (3 * b.i - 2) * b.count;
  for (const auto& b : wheel_plus_blocks) n += (b.a + b.p - 1) * b.count;
  for (const auto& b : star_blocks) n += (b.b - 1) * b.count;
  return n;
}

int expected_edge_count(const BlockStarSpec& spec) {
  int m = 0;
  for (const auto& b : spec.complete_blocks) {
    int r = 3 * b.i - 1;
    m += b.count * (r * (r - 1) / 2);
  }
  for (const auto& b : spec.wheel_plus_blocks) m += b.count * (2 * (b.a + b.p) - b.p - 1);
  for (const auto& b : spec.star_blocks) {
    int twojm1 = 2 * b.j - 1;
    m += b.count * (twojm1 * b.b - 2 * b.j * b.j + b.j);
  }
  return m;
}

namespace {

struct BlockInstance {
  SimpleGraph graph;
  int attach;  // local vertex identified with the shared cut vertex
};

void validate_block_spec(const BlockStarSpec& spec) {
  for (const auto& b : spec.complete_blocks) {
    if (b.count < 0 || b.i < 1) bad_param("block-star: complete block needs i >= 1");
  }
  for (const auto& b : spec.wheel_plus_blocks) {
    if (b.count < 0 || b.a < 6 || b.p < 1) {
      bad_param("block-star: wheel-plus block needs a >= 6, p >= 1");
    }
  }
  for (const auto& b : spec.star_blocks) {
    if (b.count < 0 || b.j < 2 || b.b < 3 * b.j) {
      bad_param("block-star: star block needs b >= 3j >= 6");
    }
  }
}

}  // namespace

SimpleGraph build_block_star(const BlockStarSpec& spec) {
  validate_block_spec(spec);
  int n_complete = 0, n_other = 0;
  for (const auto& b : spec.complete_blocks) n_complete += b.count;
  for (const auto& b : spec.wheel_plus_blocks) n_other += b.count;
  for (const auto& b : spec.star_blocks) n_other += b.count;
  if (n_complete + n_other == 0) bad_param("block-star: no blocks");
  if (n_complete == 1 && n_other == 0) {
    bad_param("block-star: a lone complete block is a complete graph");
  }
  if (spec.vertex_count() > kMaxVertices) bad_param("block-star: more than 62 vertices");

  std::vector<BlockInstance> instances;
  auto completes = spec.complete_blocks;
  std::sort(completes.begin(), completes.end(),
            [](const auto& x, const auto& y) { return x.i > y.i; });
  for (const auto& b : completes) {
    for (int c = 0; c < b.count; ++c) instances.push_back({complete_graph(3 * b.i - 1), 0});
  }
  auto wheels = spec.wheel_plus_blocks;
  std::sort(wheels.begin(), wheels.end(), [](const auto& x, const auto& y) {
    return std::pair(x.a, x.p) < std::pair(y.a, y.p);
  });
  for (const auto& b : wheels) {
    // attach at the first path-part vertex (local index a)
    for (int c = 0; c < b.count; ++c) instances.push_back({wheel_plus(b.a, b.p), b.a});
  }
  auto stars = spec.star_blocks;
  std::sort(stars.begin(), stars.end(), [](const auto& x, const auto& y) {
    return std::pair(x.b, x.j) < std::pair(y.b, y.j);
  });
  for (const auto& b : stars) {
    // attach at the first non-dominating vertex (local index 2j-1)
    for (int c = 0; c < b.count; ++c) instances.push_back({star_join(b.b, 2 * b.j - 1), 2 * b.j - 1});
  }

  std::vector<std::pair<int, int>> edges;
  int next = 1;
  for (const auto& inst : instances) {
    std::vector<int> global(inst.graph.n());
    for (int v = 0; v < inst.graph.n(); ++v) {
      global[v] = (v == inst.attach) ? 0 : next++;
    }
    for (auto [u, v] : inst.graph.edges()) edges.emplace_back(global[u], global[v]);
  }
  return SimpleGraph::from_edges(next, edges);
}

ConstructOutcome construct_saturated(int n, int k, int m) {
  if (k < 2) return {std::nullopt, "NotRealizable: only k >= 2 is implemented"};
  if (n < 1 || n > kMaxVertices) {
    return {std::nullopt, "NotRealizable: n outside [1, 62]"};
  }

  auto finish = [&](BlockStarSpec spec, const std::string& detail) -> ConstructOutcome {
    SimpleGraph g = build_block_star(spec);
    if (g.n() != n || g.edge_count() != m) {
      throw std::logic_error("construct_saturated: solved parameters do not match (n, m)");
    }
    return {g, detail};
  };

  // route K5-blocks: (k-1) K5 blocks plus pendant edges, m = n+6k-7
  if (m == n + 6 * k - 7) {
    int k1 = n - 4 * k + 3;
    if (k1 >= 0 && (k >= 3 || k1 >= 1)) {
      BlockStarSpec spec;
      spec.complete_blocks.push_back({2, k - 1});
      if (k1 > 0) spec.complete_blocks.push_back({1, k1});
      return finish(spec, "route K5-blocks: " + std::to_string(k - 1) + " K5 blocks, " +
                              std::to_string(k1) + " pendant edges");
    }
  }
  // route wheel-plus: (k-2) K5 blocks, one W_{a0}^{+1}, pendant edges
  {
    int k1 = 2 * n + 2 * k - 6 - m;
    int a0 = n - k1 - 4 * k + 7;
    if (k1 >= 0 && a0 >= 6) {
      BlockStarSpec spec;
      if (k > 2) spec.complete_blocks.push_back({2, k - 2});
      spec.wheel_plus_blocks.push_back({a0, 1, 1});
      if (k1 > 0) spec.complete_blocks.push_back({1, k1});
      return finish(spec, "route wheel-plus: W_" + std::to_string(a0) + "^{+1}, " +
                              std::to_string(k - 2) + " K5 blocks, " + std::to_string(k1) +
                              " pendant edges");
    }
  }
  // route star-block: one S_{b0,2k-1} block plus pendant edges, m = (2k-2) b0 + n - 2k^2 + k
  {
    int num = m - n + 2 * k * k - k;
    if (num > 0 && num % (2 * k - 2) == 0) {
      int b0 = num / (2 * k - 2);
      int k1 = n - b0;
      if (b0 >= 3 * k && k1 >= 0) {
        BlockStarSpec spec;
        spec.star_blocks.push_back({b0, k, 1});
        if (k1 > 0) spec.complete_blocks.push_back({1, k1});
        return finish(spec, "route star-block: S_{" + std::to_string(b0) + "," +
                                std::to_string(2 * k - 1) + "} block, " + std::to_string(k1) +
                                " pendant edges");
      }
    }
  }
  // route star-mix: k >= 3: one W_{a0}^{+1}, (k-3) S_{6,3} blocks and one S_{b0,3}
  if (k >= 3) {
    int a0 = 3 * n - 3 * k + 3 - m;
    int b0 = m - 2 * n - 2 * k + 12;
    if (a0 >= 6 && b0 >= 6) {
      BlockStarSpec spec;
      spec.wheel_plus_blocks.push_back({a0, 1, 1});
      if (k > 3) spec.star_blocks.push_back({6, 2, k - 3});
      spec.star_blocks.push_back({b0, 2, 1});
      return finish(spec, "route star-mix: W_" + std::to_string(a0) + "^{+1}, " +
                              std::to_string(k - 3) + " S_{6,3} blocks, one S_{" +
                              std::to_string(b0) + ",3}");
    }
  }
  return {std::nullopt,
          "NotRealizable: no implemented case covers (n=" + std::to_string(n) +
              ", k=" + std::to_string(k) + ", m=" + std::to_string(m) + ")"};
}

}  // namespace satspec
