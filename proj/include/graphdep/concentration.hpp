#pragma once

#include <map>
#include <string>
#include <vector>

#include "graphdep/graph.hpp"
#include "graphdep/lipschitz.hpp"
#include "graphdep/tree_partition.hpp"

namespace graphdep {

/// exp(-2 t^2 / denominator), evaluated in log space and clamped to [0, 1].
/// t <= 0 gives 1; a zero denominator with t > 0 gives 0 (degenerate case:
/// the function is constant).
double tail_bound_from_denominator(double denominator, double t);

/// One-sided tail bound for Lipschitz functions of independent variables:
/// exp(-2 t^2 / ||c||_2^2).
double mcdiarmid_bound(const LipschitzVector& c, double t);

/// exp(-2 t^2 / (chi_f ||c||_2^2)); requires chi_f >= 1. Coincides with
/// mcdiarmid_bound at chi_f = 1.
double janson_fractional_bound(const LipschitzVector& c, double chi_f, double t);

/// Denominator of the forest bound: per-tree squared minimum coefficient
/// plus squared coefficient sums over edges. g must be a forest.
double forest_denominator(const Graph& g, const LipschitzVector& c);

/// exp(-2 t^2 / forest_denominator); rejects non-forests (use
/// graph_general_bound for those).
double forest_bound(const Graph& g, const LipschitzVector& c, double t);

enum class SearchMode { exact, heuristic };

/// exp(-2 t^2 / D) with D the (weighted) cost of the best tree-partition
/// found in the requested mode, together with the witnessing partition.
struct GeneralBound {
  double probability = 1.0;
  double denominator = 0.0;
  TreePartition partition;
};
GeneralBound graph_general_bound(const Graph& g, const LipschitzVector& c, double t,
                                 SearchMode mode);

/// Uniform-coefficient variant: exp(-2 t^2 / (Lambda(G) c^2)).
double graph_uniform_bound(const Graph& g, double c_scalar, double t, SearchMode mode);

/// Evaluation of one bound family on a deviation grid.
struct BoundReport {
  std::string family;
  std::map<std::string, double> parameters;
  std::vector<std::pair<double, double>> tail;  // (t, probability bound)
  bool degenerate = false;
};

/// Every family applicable to (g, c) on the grid: mcdiarmid only on edgeless
/// graphs, janson (exact chi_f within the size limit, greedy otherwise),
/// forest when g is acyclic, and the general tree-partition bound always.
/// best_index flags the family with the smallest bound at the last grid
/// point.
struct TightestReport {
  std::vector<BoundReport> candidates;
  size_t best_index = 0;
};
TightestReport tightest_bound(const Graph& g, const LipschitzVector& c,
                              const std::vector<double>& t_grid);
TightestReport tightest_bound(const Graph& g, const LipschitzVector& c, double t);

}  // namespace graphdep
