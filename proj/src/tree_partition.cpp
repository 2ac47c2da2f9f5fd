#include "graphdep/tree_partition.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <queue>
#include <set>

namespace graphdep {

int default_partition_limit() {
  if (const char* env = std::getenv("GRAPHDEP_LAMBDA_LIMIT")) {
    int value = std::atoi(env);
    if (value > 0) return value;
  }
  return 10;
}

TreePartition validate_tree_partition(const Graph& g, std::vector<VertexSet> bags) {
  int n = g.vertex_count();
  std::vector<int> bag_of(n, -1);
  for (size_t b = 0; b < bags.size(); ++b) {
    bags[b] = canonical_vertex_set(bags[b], n);
    if (bags[b].empty()) {
      throw ValidationError("bag " + std::to_string(b) + " is empty");
    }
    for (int v : bags[b]) {
      if (bag_of[v] != -1) {
        throw ValidationError("vertex " + std::to_string(v) +
                              " appears in more than one bag");
      }
      bag_of[v] = static_cast<int>(b);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (bag_of[v] == -1) {
      throw ValidationError("vertex " + std::to_string(v) + " is not in any bag");
    }
  }

  std::set<std::pair<int, int>> cross;
  for (auto [u, v] : g.edges()) {
    int bu = bag_of[u], bv = bag_of[v];
    if (bu != bv) cross.insert({std::min(bu, bv), std::max(bu, bv)});
  }
  Graph quotient(static_cast<int>(bags.size()),
                 {cross.begin(), cross.end()});
  if (!is_forest(quotient)) {
    throw ValidationError("quotient graph contains a cycle; not a tree-partition");
  }
  return {std::move(bags), std::move(quotient)};
}

PartitionCost partition_cost(const TreePartition& tp,
                             const std::optional<LipschitzVector>& c) {
  const auto& bags = tp.bags;
  int nbags = static_cast<int>(bags.size());

  PartitionCost cost;
  for (const auto& bag : bags) {
    cost.width = std::max(cost.width, static_cast<int>(bag.size()));
  }

  std::vector<double> size(nbags), weight(nbags, 0.0);
  for (int b = 0; b < nbags; ++b) size[b] = static_cast<double>(bags[b].size());
  if (c) {
    int n = 0;
    for (const auto& bag : bags) n += static_cast<int>(bag.size());
    check_lipschitz(*c, n);
    for (int b = 0; b < nbags; ++b) {
      for (int v : bags[b]) weight[b] += (*c)[v];
    }
  }

  for (const auto& tree : connected_components(tp.quotient)) {
    double min_size = std::numeric_limits<double>::infinity();
    double min_weight = std::numeric_limits<double>::infinity();
    for (int b : tree) {
      min_size = std::min(min_size, size[b]);
      min_weight = std::min(min_weight, weight[b]);
    }
    cost.lambda_value += min_size * min_size;
    if (c) {
      cost.weighted_value = cost.weighted_value.value_or(0.0) + min_weight * min_weight;
    }
  }
  for (auto [u, v] : tp.quotient.edges()) {
    double merged = size[u] + size[v];  // bags are disjoint
    cost.lambda_value += merged * merged;
    if (c) {
      double merged_w = weight[u] + weight[v];
      cost.weighted_value = cost.weighted_value.value_or(0.0) + merged_w * merged_w;
    }
  }
  if (c && !cost.weighted_value) cost.weighted_value = 0.0;
  return cost;
}

int tree_partition_width(const TreePartition& tp) {
  int width = 0;
  for (const auto& bag : tp.bags) width = std::max(width, static_cast<int>(bag.size()));
  return width;
}

namespace {

// Search state for the restricted-growth enumeration: the partial quotient
// only ever gains edges as vertices are assigned, so any cycle in it rules
// out every completion of the current prefix.
struct PartitionSearch {
  const Graph& g;
  bool weighted;
  const LipschitzVector* c;

  std::vector<int> bag_of;
  int num_bags = 0;
  std::vector<std::vector<int>> quotient_adj;
  std::set<std::pair<int, int>> quotient_edges;

  double best_cost = std::numeric_limits<double>::infinity();
  int best_bags = 0;
  std::vector<VertexSet> best_partition;

  explicit PartitionSearch(const Graph& graph, const LipschitzVector* coeffs)
      : g(graph), weighted(coeffs != nullptr), c(coeffs) {
    bag_of.assign(g.vertex_count(), -1);
    quotient_adj.assign(g.vertex_count(), {});
  }

  bool connected_in_quotient(int a, int b) const {
    std::vector<bool> seen(num_bags + 1, false);
    std::queue<int> q;
    q.push(a);
    seen[a] = true;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      if (u == b) return true;
      for (int w : quotient_adj[u]) {
        if (!seen[w]) {
          seen[w] = true;
          q.push(w);
        }
      }
    }
    return false;
  }

  void evaluate_leaf() {
    int n = g.vertex_count();
    std::vector<VertexSet> bags(num_bags);
    for (int v = 0; v < n; ++v) bags[bag_of[v]].push_back(v);

    std::vector<double> mass(num_bags, 0.0);
    for (int b = 0; b < num_bags; ++b) {
      for (int v : bags[b]) mass[b] += weighted ? (*c)[v] : 1.0;
    }

    double cost = 0.0;
    std::vector<bool> seen(num_bags, false);
    for (int root = 0; root < num_bags; ++root) {
      if (seen[root]) continue;
      double tree_min = std::numeric_limits<double>::infinity();
      std::queue<int> q;
      q.push(root);
      seen[root] = true;
      while (!q.empty()) {
        int u = q.front();
        q.pop();
        tree_min = std::min(tree_min, mass[u]);
        for (int w : quotient_adj[u]) {
          if (!seen[w]) {
            seen[w] = true;
            q.push(w);
          }
        }
      }
      cost += tree_min * tree_min;
    }
    for (auto [u, v] : quotient_edges) {
      double merged = mass[u] + mass[v];
      cost += merged * merged;
    }

    constexpr double kTieEps = 1e-12;
    bool better = cost < best_cost - kTieEps;
    if (!better && cost < best_cost + kTieEps) {
      better = num_bags < best_bags ||
               (num_bags == best_bags && bags < best_partition);
    }
    if (better) {
      best_cost = cost;
      best_bags = num_bags;
      best_partition = std::move(bags);
    }
  }

  void search(int v) {
    if (v == g.vertex_count()) {
      evaluate_leaf();
      return;
    }
    int choices = std::min(num_bags + 1, v + 1);
    for (int b = 0; b < choices; ++b) {
      std::vector<std::pair<int, int>> added;
      bool ok = true;
      for (int u : g.neighbors(v)) {
        if (u >= v) break;  // neighbors are sorted; only assigned ones matter
        int bu = bag_of[u];
        if (bu == b) continue;
        std::pair<int, int> edge{std::min(bu, b), std::max(bu, b)};
        if (quotient_edges.count(edge)) continue;
        if (connected_in_quotient(bu, b)) {
          ok = false;
          break;
        }
        quotient_edges.insert(edge);
        quotient_adj[edge.first].push_back(edge.second);
        quotient_adj[edge.second].push_back(edge.first);
        added.push_back(edge);
      }
      if (ok) {
        bag_of[v] = b;
        bool new_bag = (b == num_bags);
        if (new_bag) ++num_bags;
        search(v + 1);
        if (new_bag) --num_bags;
        bag_of[v] = -1;
      }
      for (auto it = added.rbegin(); it != added.rend(); ++it) {
        quotient_edges.erase(*it);
        quotient_adj[it->first].pop_back();
        quotient_adj[it->second].pop_back();
      }
    }
  }
};

}  // namespace

ComplexityResult forest_complexity_exact(const Graph& g,
                                         const std::optional<LipschitzVector>& c,
                                         int exact_limit) {
  int n = g.vertex_count();
  if (n > exact_limit) {
    throw SizeLimitError("exact tree-partition search limited to n <= " +
                         std::to_string(exact_limit) + " vertices (got " +
                         std::to_string(n) + ")");
  }
  if (c) check_lipschitz(*c, n);
  if (n == 0) {
    return {PartitionCost{}, TreePartition{}, true, "exact", {}};
  }

  PartitionSearch search(g, c ? &*c : nullptr);
  search.search(0);

  ComplexityResult result;
  result.partition = validate_tree_partition(g, search.best_partition);
  result.cost = partition_cost(result.partition, c);
  result.exact = true;
  result.method = "exact";
  return result;
}

namespace {

ComplexityResult finish(const Graph& g, std::vector<VertexSet> bags,
                        const std::string& method,
                        std::map<std::string, double> family_params = {}) {
  ComplexityResult result;
  result.partition = validate_tree_partition(g, std::move(bags));
  result.cost = partition_cost(result.partition);
  result.exact = false;
  result.method = method;
  result.family_params = std::move(family_params);
  return result;
}

std::vector<VertexSet> singleton_bags(const Graph& g) {
  std::vector<VertexSet> bags;
  for (int v = 0; v < g.vertex_count(); ++v) bags.push_back({v});
  return bags;
}

bool is_cycle_graph(const Graph& g) {
  int n = g.vertex_count();
  if (n < 3 || g.edge_count() != n) return false;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) != 2) return false;
  }
  return connected_components(g).size() == 1;
}

// Walks the cycle from vertex 0 and pairs vertices symmetric around it, so
// the quotient is a path with singleton end bags.
std::vector<VertexSet> cycle_pairing_bags(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> order{0};
  int prev = -1, cur = 0;
  for (int step = 1; step < n; ++step) {
    const auto& nb = g.neighbors(cur);
    int next = (nb[0] == prev) ? nb[1] : nb[0];
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  std::vector<VertexSet> bags;
  bags.push_back({order[0]});
  int last_pair = (n % 2 == 0) ? n / 2 - 1 : n / 2;
  for (int k = 1; k <= last_pair; ++k) bags.push_back({order[k], order[n - k]});
  if (n % 2 == 0) bags.push_back({order[n / 2]});
  return bags;
}

bool try_grid_bags(const Graph& g, std::vector<VertexSet>& bags_out) {
  int n = g.vertex_count();
  int m = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
  if (m < 2 || m * m != n) return false;
  if (g.edge_count() != 2 * m * (m - 1)) return false;

  int corner = -1;
  for (int v = 0; v < n && corner < 0; ++v) {
    if (g.degree(v) == 2) corner = v;
  }
  if (corner < 0) return false;

  // BFS layers from a corner are the anti-diagonals.
  std::vector<int> dist(n, -1);
  std::queue<int> q;
  q.push(corner);
  dist[corner] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
    }
  }
  int layers = 2 * m - 1;
  std::vector<VertexSet> bags(layers);
  for (int v = 0; v < n; ++v) {
    if (dist[v] < 0 || dist[v] >= layers) return false;
    bags[dist[v]].push_back(v);
  }
  for (int d = 0; d < layers; ++d) {
    int expected = std::min({d + 1, m, layers - d});
    if (static_cast<int>(bags[d].size()) != expected) return false;
  }
  bags_out = std::move(bags);
  return true;
}

bool try_chain_bags(const Graph& g, std::vector<VertexSet>& bags_out, int& m_out) {
  int n = g.vertex_count();
  for (int m = 2; m < n; ++m) {
    long long expected = 1LL * m * n - 1LL * m * (m + 1) / 2;
    if (g.edge_count() != expected) continue;
    bool subset = true;
    for (auto [u, v] : g.edges()) {
      if (v - u > m) {
        subset = false;
        break;
      }
    }
    if (!subset) continue;  // counts matched by coincidence only
    std::vector<VertexSet> bags;
    for (int start = 0; start < n; start += m) {
      VertexSet bag;
      for (int v = start; v < std::min(n, start + m); ++v) bag.push_back(v);
      bags.push_back(std::move(bag));
    }
    bags_out = std::move(bags);
    m_out = m;
    return true;
  }
  return false;
}

// BFS layers give a path quotient on each component; a single bag per
// component is sometimes cheaper. Costs add over components, so each one
// picks its better option independently.
std::vector<VertexSet> fallback_bags(const Graph& g) {
  std::vector<VertexSet> bags;
  for (const auto& comp : connected_components(g)) {
    int root = comp[0];
    for (int v : comp) {
      if (g.degree(v) < g.degree(root)) root = v;
    }
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> q;
    q.push(root);
    dist[root] = 0;
    int max_dist = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      max_dist = std::max(max_dist, dist[u]);
      for (int w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    std::vector<VertexSet> layers(max_dist + 1);
    for (int v : comp) layers[dist[v]].push_back(v);

    double layer_cost = 0.0;
    double min_layer = std::numeric_limits<double>::infinity();
    for (const auto& layer : layers) {
      min_layer = std::min(min_layer, static_cast<double>(layer.size()));
    }
    layer_cost += min_layer * min_layer;
    for (size_t i = 0; i + 1 < layers.size(); ++i) {
      double merged = static_cast<double>(layers[i].size() + layers[i + 1].size());
      layer_cost += merged * merged;
    }
    double single_cost = static_cast<double>(comp.size()) * comp.size();

    if (single_cost < layer_cost) {
      bags.push_back(comp);
    } else {
      for (auto& layer : layers) bags.push_back(std::move(layer));
    }
  }
  return bags;
}

}  // namespace

ComplexityResult forest_complexity_heuristic(const Graph& g) {
  if (is_forest(g)) {
    double trees = static_cast<double>(connected_components(g).size());
    return finish(g, singleton_bags(g), "forest-identity", {{"trees", trees}});
  }
  if (is_cycle_graph(g)) {
    return finish(g, cycle_pairing_bags(g), "cycle-pairing");
  }
  std::vector<VertexSet> bags;
  if (try_grid_bags(g, bags)) {
    double side = std::sqrt(static_cast<double>(g.vertex_count()));
    return finish(g, std::move(bags), "grid-antidiagonal", {{"m", std::round(side)}});
  }
  int chain_m = 0;
  if (try_chain_bags(g, bags, chain_m)) {
    return finish(g, std::move(bags), "mdependent-blocks",
                  {{"m", static_cast<double>(chain_m)}});
  }
  return finish(g, fallback_bags(g), "bfs-layers");
}

}  // namespace graphdep
