#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace satspec {

// Hard cap on the order so a graph6 size field is always a single byte.
inline constexpr int kMaxVertices = 62;

// Labeled simple graph on vertex set [0, n).  Adjacency is one 64-bit row
// mask per vertex.  Values are immutable after construction; every operation
// that "modifies" a graph returns a fresh value, so graphs can be shared
// freely between worker threads.
class SimpleGraph {
public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n);

  // Errors on n outside [0, 62], vertices outside [0, n) or u == v.
  // Duplicate pairs (in either order) collapse to a single edge.
  static SimpleGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return n_; }
  int edge_count() const;
  bool has_edge(int u, int v) const;
  int degree(int v) const { return degree_in(rows_[v]); }
  int min_degree() const;  // 0 for the empty graph
  uint64_t row(int v) const { return rows_[v]; }
  uint64_t vertex_mask() const;

  std::vector<std::pair<int, int>> edges() const;      // lexicographic
  std::vector<std::pair<int, int>> non_edges() const;  // lexicographic

  SimpleGraph with_edge(int u, int v) const;
  SimpleGraph without_edge(int u, int v) const;
  // Deletes v; vertices above v shift down by one.
  SimpleGraph without_vertex(int v) const;
  // Induced subgraph on the masked vertices, relabeled in ascending order.
  SimpleGraph induced(uint64_t keep) const;
  // Appends vertex n adjacent to the masked vertices.
  SimpleGraph with_new_vertex(uint64_t neighbors) const;

  // Upper-triangle adjacency bits in graph6 column order, i.e. pairs
  // (0,1),(0,2),(1,2),(0,3),...  Bits are packed MSB-first per word so that
  // word-wise comparison of two graphs of equal order is lexicographic
  // comparison of their bit strings.
  std::vector<uint64_t> triangle_bits() const;

  // Same bits in a single word; requires C(n,2) <= 64, i.e. n <= 11.
  uint64_t triangle_code() const;
  static SimpleGraph from_triangle_code(int n, uint64_t code);

  bool operator==(const SimpleGraph& other) const;

private:
  static int degree_in(uint64_t mask);
  void add_edge_unchecked(int u, int v);

  int n_ = 0;
  std::array<uint64_t, kMaxVertices> rows_{};
};

bool is_connected(const SimpleGraph& g);
int component_count(const SimpleGraph& g);
bool is_forest(const SimpleGraph& g);
bool is_tree(const SimpleGraph& g);

// Degree partition of V(G): by_degree[i] = D_i(G), delta = min degree,
// dominating = X(G), the vertices of degree n-1.
struct DegreeClasses {
  std::vector<std::vector<int>> by_degree;
  int min_degree = 0;
  std::vector<int> dominating;
};

DegreeClasses degree_classes(const SimpleGraph& g);

// Relabels g: new vertex p is old vertex perm[p].
SimpleGraph relabel(const SimpleGraph& g, const std::vector<int>& perm);

}  // namespace satspec
