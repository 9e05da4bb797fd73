#include "satspec/graph.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>
#include <string>

namespace satspec {

namespace {
uint64_t bit(int v) { return uint64_t{1} << v; }
}  // namespace

SimpleGraph::SimpleGraph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("vertex count " + std::to_string(n) +
                                " outside [0, " + std::to_string(kMaxVertices) + "]");
  }
}

SimpleGraph SimpleGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  SimpleGraph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") out of range for n=" + std::to_string(n));
    }
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    g.add_edge_unchecked(u, v);
  }
  return g;
}

int SimpleGraph::degree_in(uint64_t mask) { return std::popcount(mask); }

void SimpleGraph::add_edge_unchecked(int u, int v) {
  rows_[u] |= bit(v);
  rows_[v] |= bit(u);
}

int SimpleGraph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(rows_[v]);
  return twice / 2;
}

bool SimpleGraph::has_edge(int u, int v) const {
  assert(u >= 0 && u < n_ && v >= 0 && v < n_);
  return (rows_[u] >> v) & 1;
}

int SimpleGraph::min_degree() const {
  int d = n_ == 0 ? 0 : n_;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return n_ == 0 ? 0 : d;
}

uint64_t SimpleGraph::vertex_mask() const {
  return n_ == 64 ? ~uint64_t{0} : (uint64_t{1} << n_) - 1;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

std::vector<std::pair<int, int>> SimpleGraph::non_edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

SimpleGraph SimpleGraph::with_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) {
    throw std::invalid_argument("with_edge: bad pair");
  }
  SimpleGraph g = *this;
  g.add_edge_unchecked(u, v);
  return g;
}

SimpleGraph SimpleGraph::without_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || !has_edge(u, v)) {
    throw std::invalid_argument("without_edge: not an edge");
  }
  SimpleGraph g = *this;
  g.rows_[u] &= ~bit(v);
  g.rows_[v] &= ~bit(u);
  return g;
}

SimpleGraph SimpleGraph::without_vertex(int v) const {
  assert(v >= 0 && v < n_);
  return induced(vertex_mask() & ~bit(v));
}

SimpleGraph SimpleGraph::induced(uint64_t keep) const {
  keep &= vertex_mask();
  std::array<int, kMaxVertices> new_index{};
  int m = 0;
  for (int v = 0; v < n_; ++v) {
    if ((keep >> v) & 1) new_index[v] = m++;
  }
  SimpleGraph g(m);
  for (int v = 0; v < n_; ++v) {
    if (!((keep >> v) & 1)) continue;
    uint64_t nb = rows_[v] & keep;
    while (nb) {
      int u = std::countr_zero(nb);
      nb &= nb - 1;
      if (u > v) g.add_edge_unchecked(new_index[v], new_index[u]);
    }
  }
  return g;
}

SimpleGraph SimpleGraph::with_new_vertex(uint64_t neighbors) const {
  SimpleGraph g(n_ + 1);
  g.rows_ = rows_;
  g.n_ = n_ + 1;
  uint64_t nb = neighbors & vertex_mask();
  g.rows_[n_] = nb;
  while (nb) {
    int u = std::countr_zero(nb);
    nb &= nb - 1;
    g.rows_[u] |= bit(n_);
  }
  return g;
}

std::vector<uint64_t> SimpleGraph::triangle_bits() const {
  int nbits = n_ * (n_ - 1) / 2;
  std::vector<uint64_t> words((nbits + 63) / 64, 0);
  int pos = 0;
  for (int j = 1; j < n_; ++j) {
    for (int i = 0; i < j; ++i, ++pos) {
      if (has_edge(i, j)) words[pos / 64] |= uint64_t{1} << (63 - pos % 64);
    }
  }
  return words;
}

uint64_t SimpleGraph::triangle_code() const {
  assert(n_ <= 11);
  uint64_t code = 0;
  int pos = 0;
  for (int j = 1; j < n_; ++j)
    for (int i = 0; i < j; ++i, ++pos)
      if (has_edge(i, j)) code |= uint64_t{1} << pos;
  return code;
}

SimpleGraph SimpleGraph::from_triangle_code(int n, uint64_t code) {
  assert(n <= 11);
  SimpleGraph g(n);
  int pos = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++pos)
      if ((code >> pos) & 1) g.add_edge_unchecked(i, j);
  return g;
}

bool SimpleGraph::operator==(const SimpleGraph& other) const {
  if (n_ != other.n_) return false;
  for (int v = 0; v < n_; ++v)
    if (rows_[v] != other.rows_[v]) return false;
  return true;
}

int component_count(const SimpleGraph& g) {
  uint64_t unseen = g.vertex_mask();
  int components = 0;
  while (unseen) {
    ++components;
    uint64_t frontier = unseen & -unseen;
    uint64_t comp = 0;
    while (frontier) {
      comp |= frontier;
      uint64_t next = 0;
      uint64_t f = frontier;
      while (f) {
        int v = std::countr_zero(f);
        f &= f - 1;
        next |= g.row(v);
      }
      frontier = next & unseen & ~comp;
    }
    unseen &= ~comp;
  }
  return components;
}

bool is_connected(const SimpleGraph& g) {
  if (g.n() <= 1) return true;
  return component_count(g) == 1;
}

bool is_forest(const SimpleGraph& g) {
  return g.edge_count() == g.n() - component_count(g);
}

bool is_tree(const SimpleGraph& g) {
  return g.n() >= 1 && is_connected(g) && g.edge_count() == g.n() - 1;
}

DegreeClasses degree_classes(const SimpleGraph& g) {
  DegreeClasses dc;
  dc.by_degree.assign(g.n() == 0 ? 1 : g.n(), {});
  dc.min_degree = g.min_degree();
  for (int v = 0; v < g.n(); ++v) {
    int d = g.degree(v);
    dc.by_degree[d].push_back(v);
    if (d == g.n() - 1) dc.dominating.push_back(v);
  }
  return dc;
}

SimpleGraph relabel(const SimpleGraph& g, const std::vector<int>& perm) {
  assert(static_cast<int>(perm.size()) == g.n());
  std::vector<std::pair<int, int>> pairs;
  for (int p = 0; p < g.n(); ++p)
    for (int q = p + 1; q < g.n(); ++q)
      if (g.has_edge(perm[p], perm[q])) pairs.emplace_back(p, q);
  return SimpleGraph::from_edges(g.n(), pairs);
}

}  // namespace satspec
