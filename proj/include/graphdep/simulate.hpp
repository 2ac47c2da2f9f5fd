#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graphdep/concentration.hpp"
#include "graphdep/fractional_cover.hpp"
#include "graphdep/graph.hpp"
#include "graphdep/lipschitz.hpp"

namespace graphdep {

/// Half-open interval [lo, hi) on the line.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

struct GeneratorDescriptor {
  std::string family;
  std::map<std::string, double> params;
  std::uint64_t seed = 0;
};

/// Monte Carlo sample whose dependency graph is certified by construction:
/// values indexed by non-adjacent disjoint vertex sets are produced from
/// disjoint pieces of the underlying randomness.
struct DependentSample {
  std::vector<std::vector<double>> values;  // trials x n
  Graph graph;
  LipschitzVector lipschitz;
  GeneratorDescriptor generator;
  double clip_fraction = 0.0;
};

/// (m+1)-block factors of i.i.d. uniforms: X_i = kernel(U_i, ..., U_{i+m}).
/// Kernels "mean", "max" and "indicator" all map into [0, 1], so every
/// coordinate has Lipschitz coefficient 1. The certified graph is
/// m_dependent_chain(n, m). Per-trial randomness is derived from the master
/// seed by counter splitting, so results do not depend on execution order.
DependentSample gen_m_dependent(int n, int m, const std::string& kernel, int trials,
                                std::uint64_t seed);

/// Counts of one homogeneous Poisson process in possibly overlapping
/// intervals; the certified graph joins overlapping regions. Counts are
/// clipped so bounded-difference coefficients exist; by default region i is
/// clipped at ceil(rate len_i) + 10 sqrt(rate len_i), and the observed clip
/// frequency is reported.
DependentSample gen_poisson_regions(const std::vector<Interval>& regions, double rate,
                                    int trials, std::uint64_t seed,
                                    std::optional<double> clip = {});

/// Independent +-1 signs (empty dependency graph, coefficients 2).
DependentSample gen_iid_signs(int n, int trials, std::uint64_t seed);

enum class Statistic { sum, mean };
Statistic parse_statistic(const std::string& name);

struct TailCurve {
  std::vector<double> t_grid;
  std::vector<double> empirical;
  std::vector<double> standard_error;
};

/// Empirical exceedance frequencies of f(X) - mean(f(X)) over the trials,
/// with per-point binomial standard errors. The centering uses the
/// across-trials sample mean.
TailCurve empirical_tail(const DependentSample& sample, Statistic statistic,
                         const std::vector<double>& t_grid);

/// Monte Carlo estimate of the cover-weighted Rademacher average of
/// norm-bounded linear functions: the inner supremum over the ball of
/// radius B is B times the Euclidean norm of the signed feature sum.
/// Returns the estimate; writes the Monte Carlo standard error if asked.
double empirical_fractional_rademacher(const std::vector<std::vector<double>>& features,
                                       const FractionalCover& cover, double B,
                                       int sigma_trials, std::uint64_t seed,
                                       double* standard_error = nullptr);

/// One bound family to evaluate against an empirical tail. The chi_f
/// override exists for falsification experiments and skips the >= 1 check.
struct BoundSpec {
  std::string family;  // mcdiarmid | janson | forest | general
  std::optional<double> chi_f_override;
  std::optional<SearchMode> search;
};

struct BoundCurve {
  std::string family;
  std::map<std::string, double> parameters;
  std::vector<double> bound;
  std::vector<bool> violation;  // empirical - 3 SE > bound
};

struct SoundnessReport {
  TailCurve curve;
  std::vector<BoundCurve> bounds;
  int total_violations = 0;
};

/// Merges the empirical tail with every requested bound family on a shared
/// grid and flags violations. The sample must carry exactly the graph g.
SoundnessReport bound_vs_empirical_report(const Graph& g, const LipschitzVector& c,
                                          const DependentSample& sample,
                                          const std::vector<BoundSpec>& families,
                                          Statistic statistic,
                                          const std::vector<double>& t_grid);

struct GeneratorConfig {
  std::string family;  // mchain | poisson | signs
  int n = 0;
  int m = 0;
  std::string kernel = "mean";
  std::vector<Interval> regions;
  double rate = 1.0;
  std::optional<double> clip;
};

DependentSample run_generator(const GeneratorConfig& config, int trials,
                              std::uint64_t seed);

struct SimulationConfig {
  std::string name;
  GeneratorConfig generator;
  std::vector<BoundSpec> bounds;
  Statistic statistic = Statistic::sum;
  std::vector<double> t_grid;
};

/// Built-in configurations: mchain-janson, poisson-path, iid-signs, and the
/// deliberately unsound falsify-chif (janson with chi_f halved to 0.5).
SimulationConfig preset_config(const std::string& name);
std::vector<std::string> preset_names();

SoundnessReport run_simulation(const SimulationConfig& config, int trials,
                               std::uint64_t seed);

}  // namespace graphdep
