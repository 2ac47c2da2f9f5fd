#pragma once

// Shared test helpers: a deterministic RNG, random-instance generators, and
// brute-force oracles kept independent of the library code paths they check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <vector>

#include "graphdep/graph.hpp"
#include "graphdep/lipschitz.hpp"

namespace testutil {

struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

inline graphdep::Graph random_graph(int n, double edge_prob, Rng& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.uniform() < edge_prob) edges.emplace_back(u, v);
    }
  }
  return graphdep::make_graph(n, edges);
}

// Uniform random spanning-tree-ish forest: each non-root vertex attaches to a
// smaller-index parent with the given probability.
inline graphdep::Graph random_forest(int n, double attach_prob, Rng& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) {
    if (rng.uniform() < attach_prob) edges.emplace_back(rng.below(v), v);
  }
  return graphdep::make_graph(n, edges);
}

inline graphdep::LipschitzVector random_lipschitz(int n, Rng& rng) {
  graphdep::LipschitzVector c(n);
  for (double& x : c) x = 0.1 + 2.0 * rng.uniform();
  return c;
}

// ---- independent set-partition enumeration (first-element recursion, a
// different algorithm from the library's restricted-growth search) ----

inline void partitions_rec(const std::vector<int>& items,
                           std::vector<std::vector<int>>& current,
                           std::vector<std::vector<std::vector<int>>>& out) {
  if (items.empty()) {
    out.push_back(current);
    return;
  }
  int head = items.front();
  std::vector<int> tail(items.begin() + 1, items.end());
  int subsets = 1 << tail.size();
  for (int mask = 0; mask < subsets; ++mask) {
    std::vector<int> block{head};
    std::vector<int> rest;
    for (size_t i = 0; i < tail.size(); ++i) {
      if (mask & (1 << i)) {
        block.push_back(tail[i]);
      } else {
        rest.push_back(tail[i]);
      }
    }
    current.push_back(block);
    partitions_rec(rest, current, out);
    current.pop_back();
  }
}

inline std::vector<std::vector<std::vector<int>>> all_set_partitions(int n) {
  std::vector<int> items(n);
  std::iota(items.begin(), items.end(), 0);
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> current;
  partitions_rec(items, current, out);
  return out;
}

// ---- independent tree-partition validity and cost (brute-force edge scans,
// union-find acyclicity) ----

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

inline bool oracle_is_partition(int n, const std::vector<std::vector<int>>& bags) {
  std::vector<int> seen(n, 0);
  for (const auto& bag : bags) {
    if (bag.empty()) return false;
    for (int v : bag) {
      if (v < 0 || v >= n) return false;
      if (seen[v]++) return false;
    }
  }
  for (int v = 0; v < n; ++v) {
    if (!seen[v]) return false;
  }
  return true;
}

inline std::vector<std::pair<int, int>> oracle_quotient_edges(
    const graphdep::Graph& g, const std::vector<std::vector<int>>& bags) {
  std::vector<int> bag_of(g.vertex_count(), -1);
  for (size_t b = 0; b < bags.size(); ++b) {
    for (int v : bags[b]) bag_of[v] = static_cast<int>(b);
  }
  std::vector<std::pair<int, int>> edges;
  for (size_t a = 0; a < bags.size(); ++a) {
    for (size_t b = a + 1; b < bags.size(); ++b) {
      bool adjacent = false;
      for (int u : bags[a]) {
        for (int v : bags[b]) {
          if (g.has_edge(u, v)) adjacent = true;
        }
      }
      if (adjacent) edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  }
  return edges;
}

inline bool oracle_is_tree_partition(const graphdep::Graph& g,
                                     const std::vector<std::vector<int>>& bags) {
  if (!oracle_is_partition(g.vertex_count(), bags)) return false;
  UnionFind uf(static_cast<int>(bags.size()));
  for (auto [a, b] : oracle_quotient_edges(g, bags)) {
    if (!uf.unite(a, b)) return false;  // quotient cycle
  }
  return true;
}

inline double oracle_partition_cost(const graphdep::Graph& g,
                                    const std::vector<std::vector<int>>& bags,
                                    const std::optional<graphdep::LipschitzVector>& c) {
  auto edges = oracle_quotient_edges(g, bags);
  int nb = static_cast<int>(bags.size());
  std::vector<double> mass(nb, 0.0);
  for (int b = 0; b < nb; ++b) {
    for (int v : bags[b]) mass[b] += c ? (*c)[v] : 1.0;
  }
  UnionFind uf(nb);
  for (auto [a, b] : edges) uf.unite(a, b);
  std::vector<double> tree_min(nb, std::numeric_limits<double>::infinity());
  for (int b = 0; b < nb; ++b) {
    int root = uf.find(b);
    tree_min[root] = std::min(tree_min[root], mass[b]);
  }
  double cost = 0.0;
  for (int b = 0; b < nb; ++b) {
    if (uf.find(b) == b) cost += tree_min[b] * tree_min[b];
  }
  for (auto [a, b] : edges) {
    double merged = mass[a] + mass[b];
    cost += merged * merged;
  }
  return cost;
}

/// Minimum tree-partition cost by full enumeration; the reference for the
/// library's exact search.
inline double oracle_forest_complexity(
    const graphdep::Graph& g, const std::optional<graphdep::LipschitzVector>& c = {}) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& bags : all_set_partitions(g.vertex_count())) {
    if (!oracle_is_tree_partition(g, bags)) continue;
    best = std::min(best, oracle_partition_cost(g, bags, c));
  }
  return best;
}

/// Sort-based pairwise ranking error: for each positive score, counts
/// negatives at or above it via binary search. Exact integer agreement with
/// the quadratic definition is expected.
inline double oracle_sorted_auc_risk(std::vector<double> pos, std::vector<double> neg) {
  std::sort(neg.begin(), neg.end());
  long long errors = 0;
  for (double sp : pos) {
    auto it = std::lower_bound(neg.begin(), neg.end(), sp);
    errors += static_cast<long long>(neg.end() - it);  // negatives >= sp
  }
  return static_cast<double>(errors) / (static_cast<double>(pos.size()) * neg.size());
}

/// The i.i.d. uniform-stability bound, coded separately from the library's
/// graph-dependent formula.
inline double oracle_iid_stability_bound(double r_hat, double beta, int n, double M,
                                         double delta) {
  return r_hat + 2.0 * beta +
         (4.0 * n * beta + M) * std::sqrt(std::log(1.0 / delta) / (2.0 * n));
}

}  // namespace testutil
