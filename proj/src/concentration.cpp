#include "graphdep/concentration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "graphdep/fractional_cover.hpp"

namespace graphdep {

double tail_bound_from_denominator(double denominator, double t) {
  if (t <= 0.0) return 1.0;
  if (denominator <= 0.0) return 0.0;
  double log_bound = -2.0 * t * t / denominator;
  return std::exp(std::min(0.0, log_bound));
}

double mcdiarmid_bound(const LipschitzVector& c, double t) {
  for (double v : c) {
    if (v < 0) throw ValidationError("lipschitz coefficients must be nonnegative");
  }
  return tail_bound_from_denominator(sum_of_squares(c), t);
}

double janson_fractional_bound(const LipschitzVector& c, double chi_f, double t) {
  if (chi_f < 1.0) {
    throw ValidationError("fractional chromatic number must be >= 1");
  }
  for (double v : c) {
    if (v < 0) throw ValidationError("lipschitz coefficients must be nonnegative");
  }
  return tail_bound_from_denominator(chi_f * sum_of_squares(c), t);
}

double forest_denominator(const Graph& g, const LipschitzVector& c) {
  if (!is_forest(g)) {
    throw ValidationError(
        "graph is not a forest; use graph_general_bound for general graphs");
  }
  check_lipschitz(c, g.vertex_count());
  double denom = 0.0;
  for (const auto& tree : connected_components(g)) {
    double c_min = std::numeric_limits<double>::infinity();
    for (int v : tree) c_min = std::min(c_min, c[v]);
    denom += c_min * c_min;
  }
  for (auto [u, v] : g.edges()) {
    double pair = c[u] + c[v];
    denom += pair * pair;
  }
  return denom;
}

double forest_bound(const Graph& g, const LipschitzVector& c, double t) {
  return tail_bound_from_denominator(forest_denominator(g, c), t);
}

GeneralBound graph_general_bound(const Graph& g, const LipschitzVector& c, double t,
                                 SearchMode mode) {
  check_lipschitz(c, g.vertex_count());
  GeneralBound out;
  if (mode == SearchMode::exact) {
    ComplexityResult r = forest_complexity_exact(g, c);
    out.denominator = r.cost.weighted_value.value_or(0.0);
    out.partition = std::move(r.partition);
  } else {
    ComplexityResult r = forest_complexity_heuristic(g);
    out.partition = std::move(r.partition);
    out.denominator = partition_cost(out.partition, c).weighted_value.value_or(0.0);
  }
  out.probability = tail_bound_from_denominator(out.denominator, t);
  return out;
}

double graph_uniform_bound(const Graph& g, double c_scalar, double t, SearchMode mode) {
  if (c_scalar < 0) throw ValidationError("lipschitz coefficient must be nonnegative");
  double lambda = mode == SearchMode::exact
                      ? forest_complexity_exact(g).cost.lambda_value
                      : forest_complexity_heuristic(g).cost.lambda_value;
  return tail_bound_from_denominator(lambda * c_scalar * c_scalar, t);
}

namespace {

BoundReport make_report(const std::string& family, double denominator,
                        const std::vector<double>& t_grid) {
  BoundReport report;
  report.family = family;
  report.parameters["denominator"] = denominator;
  report.degenerate = denominator <= 0.0;
  for (double t : t_grid) {
    report.tail.emplace_back(t, tail_bound_from_denominator(denominator, t));
  }
  return report;
}

}  // namespace

TightestReport tightest_bound(const Graph& g, const LipschitzVector& c,
                              const std::vector<double>& t_grid) {
  check_lipschitz(c, g.vertex_count());
  if (t_grid.empty()) throw ValidationError("deviation grid must be nonempty");

  TightestReport out;
  double c_norm_sq = sum_of_squares(c);

  if (g.edge_count() == 0) {
    BoundReport r = make_report("mcdiarmid", c_norm_sq, t_grid);
    r.parameters["c_norm_sq"] = c_norm_sq;
    out.candidates.push_back(std::move(r));
  }

  double chi_f;
  bool chi_exact = g.vertex_count() <= default_independent_set_limit();
  chi_f = chi_exact ? chi_f_exact(g).value : chi_f_upper(g).value;
  {
    BoundReport r = make_report("janson_fractional", chi_f * c_norm_sq, t_grid);
    r.parameters["chi_f"] = chi_f;
    r.parameters["chi_f_exact"] = chi_exact ? 1.0 : 0.0;
    r.parameters["c_norm_sq"] = c_norm_sq;
    out.candidates.push_back(std::move(r));
  }

  if (is_forest(g)) {
    out.candidates.push_back(make_report("forest", forest_denominator(g, c), t_grid));
  }

  {
    SearchMode mode = g.vertex_count() <= default_partition_limit()
                          ? SearchMode::exact
                          : SearchMode::heuristic;
    GeneralBound gb = graph_general_bound(g, c, t_grid.front(), mode);
    BoundReport r = make_report("graph_general", gb.denominator, t_grid);
    r.parameters["search_exact"] = mode == SearchMode::exact ? 1.0 : 0.0;
    out.candidates.push_back(std::move(r));
  }

  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < out.candidates.size(); ++i) {
    double bound_at_end = out.candidates[i].tail.back().second;
    if (bound_at_end < best) {
      best = bound_at_end;
      out.best_index = i;
    }
  }
  return out;
}

TightestReport tightest_bound(const Graph& g, const LipschitzVector& c, double t) {
  return tightest_bound(g, c, std::vector<double>{t});
}

}  // namespace graphdep
