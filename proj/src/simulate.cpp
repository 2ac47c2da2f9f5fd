#include "graphdep/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace graphdep {

namespace {

// splitmix64; used both as a mixer for per-trial seeding and as the
// generator driving all simulation randomness (fast, seedable, and
// platform-independent).
struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  double uniform() {  // [0, 1) with 53 random bits
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }
};

SplitMix64 trial_stream(std::uint64_t master, std::uint64_t trial) {
  SplitMix64 mixer{master ^ (0xD1B54A32D192ED03ULL * (trial + 1))};
  mixer.next();
  return mixer;
}

int sample_poisson(double lambda, SplitMix64& rng) {
  if (lambda <= 0.0) return 0;
  if (lambda > 400.0) {
    // Split by additivity to keep exp(-lambda) representable.
    int chunks = static_cast<int>(std::ceil(lambda / 200.0));
    int total = 0;
    for (int i = 0; i < chunks; ++i) total += sample_poisson(lambda / chunks, rng);
    return total;
  }
  double threshold = std::exp(-lambda);
  double product = 1.0;
  int count = -1;
  do {
    ++count;
    product *= rng.uniform();
  } while (product > threshold);
  return count;
}

}  // namespace

Statistic parse_statistic(const std::string& name) {
  if (name == "sum") return Statistic::sum;
  if (name == "mean") return Statistic::mean;
  throw ValidationError("unknown statistic '" + name + "' (expected sum or mean)");
}

DependentSample gen_m_dependent(int n, int m, const std::string& kernel, int trials,
                                std::uint64_t seed) {
  if (n < 1) throw ValidationError("sample length must be >= 1");
  if (m < 0) throw ValidationError("dependence range must be >= 0");
  if (trials < 1) throw ValidationError("need at least one trial");

  enum class Kernel { mean, max, indicator } k;
  if (kernel == "mean") {
    k = Kernel::mean;
  } else if (kernel == "max") {
    k = Kernel::max;
  } else if (kernel == "indicator") {
    k = Kernel::indicator;
  } else {
    throw ValidationError("unknown block kernel '" + kernel +
                          "' (expected mean, max or indicator)");
  }

  DependentSample sample;
  sample.graph = m_dependent_chain(n, m);
  sample.lipschitz = uniform_lipschitz(n, 1.0);
  sample.generator = {"mchain",
                      {{"n", double(n)}, {"m", double(m)}, {"trials", double(trials)}},
                      seed};
  sample.values.assign(trials, std::vector<double>(n));

  std::vector<double> u(n + m);
  for (int trial = 0; trial < trials; ++trial) {
    SplitMix64 rng = trial_stream(seed, trial);
    for (double& x : u) x = rng.uniform();
    for (int i = 0; i < n; ++i) {
      double value = 0.0;
      switch (k) {
        case Kernel::mean: {
          double total = 0.0;
          for (int j = i; j <= i + m; ++j) total += u[j];
          value = total / (m + 1);
          break;
        }
        case Kernel::max: {
          value = *std::max_element(u.begin() + i, u.begin() + i + m + 1);
          break;
        }
        case Kernel::indicator: {
          double total = 0.0;
          for (int j = i; j <= i + m; ++j) total += u[j];
          value = total / (m + 1) >= 0.5 ? 1.0 : 0.0;
          break;
        }
      }
      sample.values[trial][i] = value;
    }
  }
  return sample;
}

DependentSample gen_poisson_regions(const std::vector<Interval>& regions, double rate,
                                    int trials, std::uint64_t seed,
                                    std::optional<double> clip) {
  if (regions.empty()) throw ValidationError("need at least one region");
  if (rate <= 0) throw ValidationError("rate must be positive");
  if (trials < 1) throw ValidationError("need at least one trial");
  for (const auto& r : regions) {
    if (!(r.lo < r.hi)) throw ValidationError("regions must be nonempty intervals");
  }
  int n = static_cast<int>(regions.size());

  // Overlap graph: half-open intervals, so touching endpoints do not count.
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::max(regions[i].lo, regions[j].lo) <
          std::min(regions[i].hi, regions[j].hi)) {
        edges.emplace_back(i, j);
      }
    }
  }

  // Merge into disjoint segments carrying the process.
  std::vector<Interval> segments = regions;
  std::sort(segments.begin(), segments.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> merged;
  for (const auto& seg : segments) {
    if (!merged.empty() && seg.lo <= merged.back().hi) {
      merged.back().hi = std::max(merged.back().hi, seg.hi);
    } else {
      merged.push_back(seg);
    }
  }

  LipschitzVector clips(n);
  for (int i = 0; i < n; ++i) {
    double expected = rate * (regions[i].hi - regions[i].lo);
    clips[i] = clip ? *clip : std::ceil(expected) + 10.0 * std::sqrt(expected);
  }

  DependentSample sample;
  sample.graph = Graph(n, edges);
  sample.lipschitz = clips;
  sample.generator = {"poisson",
                      {{"n", double(n)}, {"rate", rate}, {"trials", double(trials)}},
                      seed};
  sample.values.assign(trials, std::vector<double>(n, 0.0));

  long long clip_events = 0;
  for (int trial = 0; trial < trials; ++trial) {
    SplitMix64 rng = trial_stream(seed, trial);
    auto& row = sample.values[trial];
    for (const auto& seg : merged) {
      double len = seg.hi - seg.lo;
      int points = sample_poisson(rate * len, rng);
      for (int p = 0; p < points; ++p) {
        double x = seg.lo + rng.uniform() * len;
        for (int i = 0; i < n; ++i) {
          if (regions[i].lo <= x && x < regions[i].hi) row[i] += 1.0;
        }
      }
    }
    for (int i = 0; i < n; ++i) {
      if (row[i] > clips[i]) {
        row[i] = clips[i];
        ++clip_events;
      }
    }
  }
  sample.clip_fraction =
      static_cast<double>(clip_events) / (static_cast<double>(trials) * n);
  return sample;
}

DependentSample gen_iid_signs(int n, int trials, std::uint64_t seed) {
  if (n < 1) throw ValidationError("sample length must be >= 1");
  if (trials < 1) throw ValidationError("need at least one trial");
  DependentSample sample;
  sample.graph = empty_graph(n);
  sample.lipschitz = uniform_lipschitz(n, 2.0);  // values span [-1, 1]
  sample.generator = {"signs", {{"n", double(n)}, {"trials", double(trials)}}, seed};
  sample.values.assign(trials, std::vector<double>(n));
  for (int trial = 0; trial < trials; ++trial) {
    SplitMix64 rng = trial_stream(seed, trial);
    for (int i = 0; i < n; ++i) {
      sample.values[trial][i] = (rng.next() & 1u) ? 1.0 : -1.0;
    }
  }
  return sample;
}

namespace {

std::vector<double> trial_statistics(const DependentSample& sample, Statistic stat) {
  std::vector<double> out;
  out.reserve(sample.values.size());
  for (const auto& row : sample.values) {
    double total = std::accumulate(row.begin(), row.end(), 0.0);
    out.push_back(stat == Statistic::sum ? total : total / row.size());
  }
  return out;
}

}  // namespace

TailCurve empirical_tail(const DependentSample& sample, Statistic statistic,
                         const std::vector<double>& t_grid) {
  if (t_grid.empty()) throw ValidationError("deviation grid must be nonempty");
  for (size_t i = 1; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > t_grid[i - 1])) {
      throw ValidationError("deviation grid must be strictly increasing");
    }
  }
  std::vector<double> stats = trial_statistics(sample, statistic);
  double center = std::accumulate(stats.begin(), stats.end(), 0.0) / stats.size();

  TailCurve curve;
  curve.t_grid = t_grid;
  double trials = static_cast<double>(stats.size());
  for (double t : t_grid) {
    long long hits = 0;
    for (double s : stats) {
      if (s - center >= t) ++hits;
    }
    double p = static_cast<double>(hits) / trials;
    curve.empirical.push_back(p);
    curve.standard_error.push_back(std::sqrt(p * (1.0 - p) / trials));
  }
  return curve;
}

double empirical_fractional_rademacher(const std::vector<std::vector<double>>& features,
                                       const FractionalCover& cover, double B,
                                       int sigma_trials, std::uint64_t seed,
                                       double* standard_error) {
  int n = static_cast<int>(features.size());
  if (n == 0) throw ValidationError("need at least one item");
  size_t d = features.front().size();
  if (d == 0) throw ValidationError("feature dimension must be >= 1");
  if (B <= 0) throw ValidationError("norm bound must be positive");
  if (sigma_trials < 1) throw ValidationError("need at least one sigma draw");
  if (cover.host_n != n) throw ValidationError("cover does not index the items");
  std::vector<double> coverage(n, 0.0);
  for (const auto& part : cover.parts) {
    if (part.weight < 0) throw ValidationError("cover has negative weight");
    for (int v : part.set) {
      if (v < 0 || v >= n) throw ValidationError("cover references missing item");
      coverage[v] += part.weight;
    }
  }
  for (int v = 0; v < n; ++v) {
    if (std::abs(coverage[v] - 1.0) > kCoverTolerance) {
      throw ValidationError("cover weights do not sum to 1 at item " +
                            std::to_string(v));
    }
  }
  for (const auto& row : features) {
    if (row.size() != d) throw ValidationError("ragged feature matrix");
  }

  double sum = 0.0, sum_sq = 0.0;
  std::vector<int> sign(n);
  std::vector<double> accum(d);
  for (int trial = 0; trial < sigma_trials; ++trial) {
    SplitMix64 rng = trial_stream(seed, trial);
    for (int i = 0; i < n; ++i) sign[i] = (rng.next() & 1u) ? 1 : -1;
    double value = 0.0;
    for (const auto& part : cover.parts) {
      std::fill(accum.begin(), accum.end(), 0.0);
      for (int i : part.set) {
        for (size_t j = 0; j < d; ++j) accum[j] += sign[i] * features[i][j];
      }
      double norm_sq = 0.0;
      for (double a : accum) norm_sq += a * a;
      // sup over the B-ball of a linear functional = B times the dual norm
      value += part.weight * B * std::sqrt(norm_sq);
    }
    value /= n;
    sum += value;
    sum_sq += value * value;
  }
  double mean = sum / sigma_trials;
  if (standard_error) {
    double variance = std::max(0.0, sum_sq / sigma_trials - mean * mean);
    *standard_error = std::sqrt(variance / sigma_trials);
  }
  return mean;
}

namespace {

BoundCurve evaluate_bound_spec(const Graph& g, const LipschitzVector& c,
                               const BoundSpec& spec,
                               const std::vector<double>& t_grid) {
  BoundCurve curve;
  curve.family = spec.family;
  double denominator = 0.0;
  if (spec.family == "mcdiarmid") {
    denominator = sum_of_squares(c);
  } else if (spec.family == "janson") {
    double chi_f;
    if (spec.chi_f_override) {
      chi_f = *spec.chi_f_override;  // may be < 1: falsification path
    } else if (g.vertex_count() <= default_independent_set_limit()) {
      chi_f = chi_f_exact(g).value;
    } else {
      chi_f = chi_f_upper(g).value;
    }
    curve.parameters["chi_f"] = chi_f;
    denominator = chi_f * sum_of_squares(c);
  } else if (spec.family == "forest") {
    denominator = forest_denominator(g, c);
  } else if (spec.family == "general") {
    SearchMode mode = spec.search.value_or(
        g.vertex_count() <= default_partition_limit() ? SearchMode::exact
                                                      : SearchMode::heuristic);
    denominator = graph_general_bound(g, c, 1.0, mode).denominator;
  } else {
    throw ValidationError("unknown bound family '" + spec.family + "'");
  }
  curve.parameters["denominator"] = denominator;
  for (double t : t_grid) {
    curve.bound.push_back(tail_bound_from_denominator(denominator, t));
  }
  return curve;
}

}  // namespace

SoundnessReport bound_vs_empirical_report(const Graph& g, const LipschitzVector& c,
                                          const DependentSample& sample,
                                          const std::vector<BoundSpec>& families,
                                          Statistic statistic,
                                          const std::vector<double>& t_grid) {
  if (!(sample.graph == g)) {
    throw ValidationError("sample was generated for a different dependency graph");
  }
  check_lipschitz(c, g.vertex_count());

  SoundnessReport report;
  report.curve = empirical_tail(sample, statistic, t_grid);
  for (const auto& spec : families) {
    BoundCurve curve = evaluate_bound_spec(g, c, spec, t_grid);
    for (size_t i = 0; i < t_grid.size(); ++i) {
      bool violated = report.curve.empirical[i] -
                          3.0 * report.curve.standard_error[i] >
                      curve.bound[i];
      curve.violation.push_back(violated);
      if (violated) ++report.total_violations;
    }
    report.bounds.push_back(std::move(curve));
  }
  return report;
}

DependentSample run_generator(const GeneratorConfig& config, int trials,
                              std::uint64_t seed) {
  if (config.family == "mchain") {
    return gen_m_dependent(config.n, config.m, config.kernel, trials, seed);
  }
  if (config.family == "poisson") {
    return gen_poisson_regions(config.regions, config.rate, trials, seed, config.clip);
  }
  if (config.family == "signs") {
    return gen_iid_signs(config.n, trials, seed);
  }
  throw ValidationError("unknown generator family '" + config.family + "'");
}

namespace {

std::vector<double> linear_grid(double lo, double hi, int count) {
  std::vector<double> grid;
  for (int i = 0; i < count; ++i) {
    grid.push_back(lo + (hi - lo) * i / (count - 1));
  }
  return grid;
}

std::vector<Interval> chain_regions(int count, double step, double length) {
  std::vector<Interval> regions;
  for (int i = 0; i < count; ++i) {
    regions.push_back({i * step, i * step + length});
  }
  return regions;
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"mchain-janson", "poisson-path", "iid-signs", "falsify-chif"};
}

SimulationConfig preset_config(const std::string& name) {
  SimulationConfig config;
  config.name = name;
  config.statistic = Statistic::sum;
  if (name == "mchain-janson") {
    config.generator.family = "mchain";
    config.generator.n = 200;
    config.generator.m = 2;
    config.generator.kernel = "mean";
    config.bounds = {{"janson", {}, {}}};
    config.t_grid = linear_grid(0.0, 30.0, 25);
  } else if (name == "poisson-path") {
    config.generator.family = "poisson";
    config.generator.regions = chain_regions(50, 0.6, 1.0);
    config.generator.rate = 1.0;
    config.bounds = {{"forest", {}, {}}};
    config.t_grid = linear_grid(0.0, 60.0, 25);
  } else if (name == "iid-signs") {
    config.generator.family = "signs";
    config.generator.n = 100;
    config.bounds = {{"mcdiarmid", {}, {}}};
    config.t_grid = linear_grid(0.0, 36.0, 25);
  } else if (name == "falsify-chif") {
    // Same data as iid-signs, but the bound uses half the true chi_f, which
    // the soundness harness must catch.
    config.generator.family = "signs";
    config.generator.n = 100;
    config.bounds = {{"janson", 0.5, {}}};
    config.t_grid = linear_grid(0.0, 36.0, 25);
  } else {
    throw ValidationError("unknown preset '" + name + "'");
  }
  return config;
}

SoundnessReport run_simulation(const SimulationConfig& config, int trials,
                               std::uint64_t seed) {
  DependentSample sample = run_generator(config.generator, trials, seed);
  return bound_vs_empirical_report(sample.graph, sample.lipschitz, sample,
                                   config.bounds, config.statistic, config.t_grid);
}

}  // namespace graphdep
