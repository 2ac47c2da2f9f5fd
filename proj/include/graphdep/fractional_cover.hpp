#pragma once

#include <string>
#include <vector>

#include "graphdep/graph.hpp"

namespace graphdep {

struct CoverPart {
  VertexSet set;
  double weight = 0.0;
};

/// Weighted family of independent sets whose weights sum to exactly 1 at
/// every vertex of the host graph.
struct FractionalCover {
  std::vector<CoverPart> parts;
  int host_n = 0;

  double total_weight() const;
};

/// Structured validation outcome. On failure, `message` plus the bad
/// vertex or part index name the first violation found.
struct CoverCheck {
  bool ok = false;
  std::string message;
  int bad_vertex = -1;
  int bad_part = -1;
};

/// Per-vertex coverage tolerance used across this module.
inline constexpr double kCoverTolerance = 1e-9;

CoverCheck validate_cover(const Graph& g, const FractionalCover& cover,
                          double tol = kCoverTolerance);

/// Size cap for exact independent-set enumeration; override with the
/// GRAPHDEP_CHIF_LIMIT environment variable.
int default_independent_set_limit();

/// All nonempty (or all maximal) independent sets of g, in lexicographic
/// order of their sorted vertex lists. Refuses graphs above the limit.
std::vector<VertexSet> enumerate_independent_sets(
    const Graph& g, bool maximal_only,
    int exact_limit = default_independent_set_limit());

/// Fractional chromatic number with a validating cover certificate.
/// `exact` is true only for values produced by the LP path.
struct ChiF {
  double value = 0.0;
  FractionalCover certificate;
  bool exact = false;
};

/// Exact chi_f via the covering LP over maximal independent sets. The LP
/// optimum (coverage >= 1) is post-processed to an equality cover of the
/// same total weight. Deterministic certificate; optimum exact to 1e-6.
ChiF chi_f_exact(const Graph& g, int exact_limit = default_independent_set_limit());

/// Upper bound chi_f <= chi <= max_degree + 1 from a greedy proper coloring
/// (largest-first order, ties by lowest index); color classes become
/// unit-weight parts.
ChiF chi_f_upper(const Graph& g);

/// Closed-form optimal cover of line_graph(K_{m_plus, m_minus}) pairing
/// positives with cyclically shifted negatives: max(m-, m+) unit-weight
/// parts of size min(m-, m+). Vertex (i, j) of the Rook's graph has index
/// i * m_minus + j. When m_plus > m_minus the construction runs with the
/// roles swapped, which is reported in `swapped`.
struct RankingCover {
  FractionalCover cover;
  bool swapped = false;
};
RankingCover ranking_cover(int m_plus, int m_minus);

/// Dependency graph of m examples paired with each of k_classes-1 rival
/// classes: m disjoint cliques of size k_classes-1. Vertex (example e,
/// rival k) has index e * (k_classes - 1) + k.
Graph multiclass_dependency_graph(int m, int k_classes);

/// Closed-form optimal cover of multiclass_dependency_graph: k_classes-1
/// unit-weight parts, each picking one vertex per example clique.
FractionalCover multiclass_cover(int m, int k_classes);

/// Weighted sum-of-sums decomposition of `values` along the cover. The
/// recombined total provably equals the direct sum for a valid cover; the
/// equality is checked to 1e-9 relative.
struct SumDecomposition {
  std::vector<double> part_sums;
  double recombined = 0.0;
  double direct = 0.0;
};
SumDecomposition decompose_sum(const std::vector<double>& values, const Graph& g,
                               const FractionalCover& cover);

}  // namespace graphdep
