#pragma once

#include <utility>
#include <vector>

#include "graphdep/errors.hpp"

namespace graphdep {

/// Sorted, duplicate-free list of vertex indices of some host graph.
using VertexSet = std::vector<int>;

/// Sorts and deduplicates; checks membership in [0, n).
VertexSet canonical_vertex_set(VertexSet members, int n);

/// Finite simple undirected graph on vertices 0..n-1. Immutable after
/// construction; safe to share across threads.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<std::pair<int, int>> edge_list);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// Edges as (u, v) with u < v, sorted lexicographically.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const;
  bool has_edge(int u, int v) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

/// Builds a canonical Graph: reversed duplicates are merged, loops and
/// out-of-range endpoints are rejected.
Graph make_graph(int n, const std::vector<std::pair<int, int>>& edge_list);

int max_degree(const Graph& g);

/// True iff no edge of g has both endpoints in s.
bool is_independent(const Graph& g, const VertexSet& s);

/// True iff some edge has one endpoint in s and the other in t.
/// The sets must be disjoint.
bool are_sets_adjacent(const Graph& g, const VertexSet& s, const VertexSet& t);

/// True iff g is acyclic.
bool is_forest(const Graph& g);

/// Vertex sets of the connected components, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

// Generators. Sizes must be positive unless stated otherwise.
Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);           // n >= 3
Graph grid_graph(int m);            // m x m grid, vertices row-major
Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);
Graph m_dependent_chain(int n, int m);  // edge {i,j} iff 0 < |i-j| <= m; m >= 0

/// One vertex per edge of g (in lexicographic edge order), adjacent iff the
/// underlying edges share an endpoint. g must have at least one edge.
Graph line_graph(const Graph& g);

}  // namespace graphdep
