#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "satspec/graph.hpp"

namespace satspec {

// Relabeling-invariant key: the lexicographically smallest upper-triangle bit
// string over all vertex orderings.  Equal forms <=> isomorphic graphs.
struct CanonicalForm {
  int n = 0;
  std::vector<uint64_t> bits;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend std::strong_ordering operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
    if (auto c = a.n <=> b.n; c != 0) return c;
    for (size_t i = 0; i < a.bits.size(); ++i)
      if (auto c = a.bits[i] <=> b.bits[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }
};

struct CanonicalLabeling {
  std::vector<int> perm;  // canonical position -> original vertex
  SimpleGraph graph;      // g relabeled by perm
};

// Exhaustive minimization with prefix pruning and twin skipping; exact for
// every n, intended for n <= 12 where it is fast.
CanonicalLabeling canonicalize(const SimpleGraph& g);

CanonicalForm canonical_form(const SimpleGraph& g);
SimpleGraph canonical_graph(const SimpleGraph& g);

bool is_isomorphic(const SimpleGraph& a, const SimpleGraph& b);

}  // namespace satspec
