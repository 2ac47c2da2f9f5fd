#include "graphdep/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace graphdep {

namespace {

void check_vertex(int v, int n, const char* what) {
  if (v < 0 || v >= n) {
    throw ValidationError(std::string(what) + ": vertex " + std::to_string(v) +
                          " out of range [0, " + std::to_string(n) + ")");
  }
}

}  // namespace

VertexSet canonical_vertex_set(VertexSet members, int n) {
  for (int v : members) check_vertex(v, n, "vertex set");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
  if (n < 0) throw ValidationError("vertex count must be nonnegative");
  for (auto& [u, v] : edge_list) {
    check_vertex(u, n, "edge");
    check_vertex(v, n, "edge");
    if (u == v) {
      throw ValidationError("loop edge {" + std::to_string(u) + "," +
                            std::to_string(v) + "} not allowed in a simple graph");
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edge_list.begin(), edge_list.end());
  edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
  edges_ = std::move(edge_list);

  adj_.assign(n_, {});
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v, n_, "neighbors");
  return adj_[v];
}

int Graph::degree(int v) const {
  check_vertex(v, n_, "degree");
  return static_cast<int>(adj_[v].size());
}

bool Graph::has_edge(int u, int v) const {
  if (u == v) return false;
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edge_list) {
  return Graph(n, edge_list);
}

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  VertexSet cs = canonical_vertex_set(s, g.vertex_count());
  for (size_t i = 0; i < cs.size(); ++i) {
    for (size_t j = i + 1; j < cs.size(); ++j) {
      if (g.has_edge(cs[i], cs[j])) return false;
    }
  }
  return true;
}

bool are_sets_adjacent(const Graph& g, const VertexSet& s, const VertexSet& t) {
  VertexSet cs = canonical_vertex_set(s, g.vertex_count());
  VertexSet ct = canonical_vertex_set(t, g.vertex_count());
  std::vector<bool> in_t(g.vertex_count(), false);
  for (int v : ct) in_t[v] = true;
  for (int v : cs) {
    if (in_t[v]) throw ValidationError("sets must be disjoint");
  }
  for (int u : cs) {
    for (int w : g.neighbors(u)) {
      if (in_t[w]) return true;
    }
  }
  return false;
}

bool is_forest(const Graph& g) {
  // Acyclic iff |E| = |V| - (number of components).
  auto comps = connected_components(g);
  return g.edge_count() == g.vertex_count() - static_cast<int>(comps.size());
}

std::vector<VertexSet> connected_components(const Graph& g) {
  int n = g.vertex_count();
  std::vector<VertexSet> comps;
  std::vector<bool> seen(n, false);
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    VertexSet comp;
    std::queue<int> q;
    q.push(root);
    seen[root] = true;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      comp.push_back(u);
      for (int w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = true;
          q.push(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

namespace {

void require_positive(int value, const char* what) {
  if (value <= 0) {
    throw ValidationError(std::string(what) + " must be positive, got " +
                          std::to_string(value));
  }
}

}  // namespace

Graph empty_graph(int n) {
  require_positive(n, "empty graph size");
  return Graph(n, {});
}

Graph path_graph(int n) {
  require_positive(n, "path size");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw ValidationError("cycle needs n >= 3, got " + std::to_string(n));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(edges));
}

Graph grid_graph(int m) {
  require_positive(m, "grid side");
  std::vector<std::pair<int, int>> edges;
  auto id = [m](int r, int c) { return r * m + c; };
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) {
      if (c + 1 < m) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < m) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  return Graph(m * m, std::move(edges));
}

Graph complete_graph(int n) {
  require_positive(n, "complete graph size");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

Graph complete_bipartite_graph(int a, int b) {
  require_positive(a, "bipartite side a");
  require_positive(b, "bipartite side b");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  return Graph(a + b, std::move(edges));
}

Graph m_dependent_chain(int n, int m) {
  require_positive(n, "chain length");
  if (m < 0) throw ValidationError("dependence range must be nonnegative");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n && j - i <= m; ++j) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

Graph line_graph(const Graph& g) {
  if (g.edge_count() == 0) {
    throw ValidationError("line graph of an edgeless graph is undefined here");
  }
  const auto& ge = g.edges();
  int ne = static_cast<int>(ge.size());
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < ne; ++a) {
    for (int b = a + 1; b < ne; ++b) {
      auto [u1, v1] = ge[a];
      auto [u2, v2] = ge[b];
      if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2) edges.emplace_back(a, b);
    }
  }
  return Graph(ne, std::move(edges));
}

}  // namespace graphdep
