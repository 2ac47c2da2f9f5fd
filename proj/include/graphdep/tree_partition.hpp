#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graphdep/graph.hpp"
#include "graphdep/lipschitz.hpp"

namespace graphdep {

/// Partition of V(G) into bags whose quotient graph (bags as vertices,
/// cross-edges as edges) is a forest.
struct TreePartition {
  std::vector<VertexSet> bags;
  Graph quotient;
};

/// Builds the quotient for the given bags and verifies a tree-partition:
/// bags are disjoint, exhaustive and nonempty, and the quotient is acyclic.
/// Throws ValidationError otherwise.
TreePartition validate_tree_partition(const Graph& g, std::vector<VertexSet> bags);

/// Cost of a tree-partition: sum over quotient trees of the squared minimum
/// bag size, plus sum over quotient edges of the squared merged-bag size.
/// The weighted variant replaces bag sizes with bag coefficient sums.
struct PartitionCost {
  double lambda_value = 0.0;
  std::optional<double> weighted_value;
  int width = 0;
};

PartitionCost partition_cost(const TreePartition& tp,
                             const std::optional<LipschitzVector>& c = {});

int tree_partition_width(const TreePartition& tp);

/// Size cap for exact tree-partition search; override with the
/// GRAPHDEP_LAMBDA_LIMIT environment variable.
int default_partition_limit();

struct ComplexityResult {
  PartitionCost cost;
  TreePartition partition;
  bool exact = false;
  std::string method;
  std::map<std::string, double> family_params;  // detected sizes, if any
};

/// Minimum cost over all tree-partitions, by exhaustive enumeration of set
/// partitions as restricted-growth strings with incremental quotient-cycle
/// pruning. Minimizes the weighted cost when c is given, else the uniform
/// one. Ties: fewer bags, then lexicographically smallest bag list.
ComplexityResult forest_complexity_exact(
    const Graph& g, const std::optional<LipschitzVector>& c = {},
    int exact_limit = default_partition_limit());

/// Constructive upper bound. Applies the first matching construction:
/// forests keep singleton bags; cycles use the paired layout; square grids
/// use anti-diagonal bags; m-dependent chains use consecutive blocks of
/// size m; anything else falls back to BFS layers from a minimum-degree
/// root (or one bag per component when that is cheaper). The returned
/// partition is always validated; the cost is an upper bound only.
ComplexityResult forest_complexity_heuristic(const Graph& g);

}  // namespace graphdep
