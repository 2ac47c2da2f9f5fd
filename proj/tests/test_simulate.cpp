#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "graphdep/simulate.hpp"
#include "test_util.hpp"

using namespace graphdep;

namespace {

double per_trial_sum(const std::vector<double>& row) {
  return std::accumulate(row.begin(), row.end(), 0.0);
}

// Two-sample Kolmogorov-Smirnov statistic.
double ks_statistic(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double d = 0.0;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] <= b[j]) {
      ++i;
    } else {
      ++j;
    }
    double fa = static_cast<double>(i) / a.size();
    double fb = static_cast<double>(j) / b.size();
    d = std::max(d, std::abs(fa - fb));
  }
  return d;
}

}  // namespace

TEST_CASE("m-dependent generator basics") {
  DependentSample iid = gen_m_dependent(6, 0, "mean", 50, 1);
  CHECK(iid.graph.edge_count() == 0);

  DependentSample dep = gen_m_dependent(6, 2, "mean", 50, 1);
  CHECK(dep.graph == m_dependent_chain(6, 2));
  for (const auto& row : dep.values) {
    for (double x : row) {
      CHECK(x >= 0.0);
      CHECK(x <= 1.0);
    }
  }

  DependentSample again = gen_m_dependent(6, 2, "mean", 50, 1);
  CHECK(dep.values == again.values);  // bit-identical reruns
  DependentSample other = gen_m_dependent(6, 2, "mean", 50, 2);
  CHECK(dep.values != other.values);

  for (const char* kernel : {"max", "indicator"}) {
    DependentSample k = gen_m_dependent(5, 1, kernel, 20, 3);
    for (const auto& row : k.values) {
      for (double x : row) {
        CHECK(x >= 0.0);
        CHECK(x <= 1.0);
      }
    }
  }

  CHECK_THROWS_AS(gen_m_dependent(5, 1, "median", 10, 1), ValidationError);
  CHECK_THROWS_AS(gen_m_dependent(0, 1, "mean", 10, 1), ValidationError);
}

TEST_CASE("beyond-range coordinates are uncorrelated") {
  int trials = 20000;
  DependentSample s = gen_m_dependent(8, 2, "mean", trials, 2025);
  auto column = [&](int i) {
    std::vector<double> col(trials);
    for (int t = 0; t < trials; ++t) col[t] = s.values[t][i];
    return col;
  };
  auto corr = [&](const std::vector<double>& x, const std::vector<double>& y) {
    double mx = std::accumulate(x.begin(), x.end(), 0.0) / x.size();
    double my = std::accumulate(y.begin(), y.end(), 0.0) / y.size();
    double sxy = 0, sxx = 0, syy = 0;
    for (size_t i = 0; i < x.size(); ++i) {
      sxy += (x[i] - mx) * (y[i] - my);
      sxx += (x[i] - mx) * (x[i] - mx);
      syy += (y[i] - my) * (y[i] - my);
    }
    return sxy / std::sqrt(sxx * syy);
  };
  // distance 3 > m = 2: independent by construction
  CHECK(std::abs(corr(column(0), column(3))) < 3.0 / std::sqrt(double(trials)));
  // adjacent coordinates share two uniforms and must correlate strongly
  CHECK(corr(column(0), column(1)) > 0.5);
}

TEST_CASE("poisson region generator") {
  // disjoint regions: empty graph, counts near rate * length
  std::vector<Interval> disjoint{{0, 1}, {2, 3}, {4, 5}};
  DependentSample d = gen_poisson_regions(disjoint, 2.0, 20000, 11);
  CHECK(d.graph.edge_count() == 0);
  double mean0 = 0;
  for (const auto& row : d.values) mean0 += row[0];
  mean0 /= d.values.size();
  CHECK(std::abs(mean0 - 2.0) < 4.0 * std::sqrt(2.0 / 20000));
  CHECK(d.clip_fraction < 1e-6);

  // chain of intervals overlapping only the successor: path graph
  std::vector<Interval> chain;
  for (int i = 0; i < 5; ++i) chain.push_back({i * 0.6, i * 0.6 + 1.0});
  DependentSample c = gen_poisson_regions(chain, 1.0, 200, 12);
  CHECK(c.graph == path_graph(5));

  // identical regions always agree and are adjacent
  DependentSample twin = gen_poisson_regions({{0, 1}, {0, 1}}, 1.5, 500, 13);
  CHECK(twin.graph.has_edge(0, 1));
  for (const auto& row : twin.values) CHECK(row[0] == row[1]);

  CHECK_THROWS_AS(gen_poisson_regions(disjoint, 0.0, 10, 1), ValidationError);
  CHECK_THROWS_AS(gen_poisson_regions({{1, 1}}, 1.0, 10, 1), ValidationError);
}

TEST_CASE("empirical tail curve") {
  DependentSample constant = gen_m_dependent(4, 0, "indicator", 100, 5);
  for (auto& row : constant.values) row.assign(4, 0.25);
  TailCurve flat = empirical_tail(constant, Statistic::sum, {0.1, 0.5, 1.0});
  for (double p : flat.empirical) CHECK(p == 0.0);

  DependentSample signs = gen_iid_signs(100, 20000, 99);
  std::vector<double> grid;
  for (int i = 1; i <= 10; ++i) grid.push_back(3.0 * i);
  TailCurve curve = empirical_tail(signs, Statistic::sum, grid);
  for (size_t i = 0; i < grid.size(); ++i) {
    double hoeffding = mcdiarmid_bound(signs.lipschitz, grid[i]);
    CHECK(curve.empirical[i] - 3.0 * curve.standard_error[i] <= hoeffding);
    if (i > 0) CHECK(curve.empirical[i] <= curve.empirical[i - 1]);
  }

  CHECK_THROWS_AS(empirical_tail(signs, Statistic::sum, {}), ValidationError);
  CHECK_THROWS_AS(empirical_tail(signs, Statistic::sum, {1.0, 1.0}), ValidationError);
}

TEST_CASE("sample centering agrees with the analytic mean for uniform sums") {
  // mean-kernel blocks of uniforms have expectation 1/2 per coordinate
  int trials = 20000, n = 200;
  DependentSample s = gen_m_dependent(n, 2, "mean", trials, 555);
  double mean_sum = 0.0;
  for (const auto& row : s.values) mean_sum += per_trial_sum(row);
  mean_sum /= trials;
  double analytic = n / 2.0;
  CHECK(std::abs(mean_sum - analytic) < 0.2);  // ~4 sigma of the MC mean

  // tails centered at the analytic mean stay below the Janson bound too
  std::vector<double> stats(trials);
  for (int t = 0; t < trials; ++t) stats[t] = per_trial_sum(s.values[t]);
  double chi_f = 3.0;  // chain(n, 2) colors with m + 1 = 3
  for (double t : {5.0, 10.0, 15.0, 20.0}) {
    long long hits = 0;
    for (double v : stats) {
      if (v - analytic >= t) ++hits;
    }
    double p = static_cast<double>(hits) / trials;
    double se = std::sqrt(p * (1 - p) / trials);
    CHECK(p - 3 * se <= janson_fractional_bound(s.lipschitz, chi_f, t));
  }
}

TEST_CASE("m = 0 matches an independent reference generator (two-sample KS)") {
  int trials = 100000, n = 10;
  DependentSample ours = gen_m_dependent(n, 0, "mean", trials, 7);
  std::vector<double> sums_ours(trials);
  for (int t = 0; t < trials; ++t) sums_ours[t] = per_trial_sum(ours.values[t]);

  // reference: a different generator entirely
  std::mt19937_64 reference(1234567);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> sums_ref(trials);
  for (int t = 0; t < trials; ++t) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += unif(reference);
    sums_ref[t] = s;
  }

  double d = ks_statistic(sums_ours, sums_ref);
  double critical =
      1.628 * std::sqrt(2.0 / trials);  // alpha = 0.01 two-sample threshold
  CHECK(d < critical);
}

TEST_CASE("empirical fractional rademacher") {
  std::vector<std::vector<double>> zeros(4, std::vector<double>(3, 0.0));
  FractionalCover one_part{{{{0, 1, 2, 3}, 1.0}}, 4};
  CHECK(empirical_fractional_rademacher(zeros, one_part, 1.0, 50, 1) == 0.0);

  // single unit item: both signs give norm 1
  std::vector<std::vector<double>> unit{{1.0}};
  FractionalCover single{{{{0}, 1.0}}, 1};
  CHECK(empirical_fractional_rademacher(unit, single, 1.0, 64, 2) ==
        doctest::Approx(1.0));

  // estimate respects the closed-form bound for exact covers
  testutil::Rng rng(2718);
  int n = 12, d = 3;
  std::vector<std::vector<double>> features(n, std::vector<double>(d));
  for (auto& row : features) {
    double norm = 0;
    for (double& x : row) {
      x = rng.uniform() * 2 - 1;
      norm += x * x;
    }
    for (double& x : row) x /= std::sqrt(norm);
  }
  Graph g = testutil::random_graph(n, 0.3, rng);
  ChiF chi = chi_f_exact(g);
  double se = 0.0;
  double estimate =
      empirical_fractional_rademacher(features, chi.certificate, 1.0, 800, 3, &se);
  CHECK(estimate <= std::sqrt(chi.value / n) + 3.0 * se);

  FractionalCover bad{{{{0, 1}, 1.0}}, n};
  CHECK_THROWS_AS(empirical_fractional_rademacher(features, bad, 1.0, 10, 1),
                  ValidationError);
  std::vector<std::vector<double>> empty_dim(2, std::vector<double>());
  FractionalCover two{{{{0, 1}, 1.0}}, 2};
  CHECK_THROWS_AS(empirical_fractional_rademacher(empty_dim, two, 1.0, 10, 1),
                  ValidationError);
}

TEST_CASE("inner supremum matches a brute-force sweep of the 2d ball") {
  constexpr double kTwoPi = 6.283185307179586;
  testutil::Rng rng(314);
  for (int trial = 0; trial < 10; ++trial) {
    double z0 = rng.uniform() * 4 - 2, z1 = rng.uniform() * 4 - 2;
    double B = 0.5 + rng.uniform() * 2;
    double closed_form = B * std::sqrt(z0 * z0 + z1 * z1);
    double brute = 0.0;
    int steps = 200000;
    for (int k = 0; k < steps; ++k) {
      double theta = kTwoPi * k / steps;
      brute = std::max(brute, B * (std::cos(theta) * z0 + std::sin(theta) * z1));
    }
    CHECK(brute == doctest::Approx(closed_form).epsilon(1e-3));
    CHECK(brute <= closed_form + 1e-12);
  }
}

TEST_CASE("soundness report flags only genuine violations") {
  SimulationConfig sound = preset_config("iid-signs");
  SoundnessReport report = run_simulation(sound, 20000, 99);
  CHECK(report.total_violations == 0);

  SimulationConfig rigged = preset_config("falsify-chif");
  SoundnessReport caught = run_simulation(rigged, 20000, 99);
  CHECK(caught.total_violations >= 1);

  // graph mismatch is rejected
  DependentSample sample = gen_iid_signs(10, 100, 1);
  CHECK_THROWS_AS(bound_vs_empirical_report(empty_graph(11), uniform_lipschitz(11, 2.0),
                                            sample, {{"mcdiarmid", {}, {}}},
                                            Statistic::sum, {1.0}),
                  ValidationError);

  CHECK_THROWS_AS(preset_config("unknown"), ValidationError);
}

TEST_CASE("simulations are reproducible for a fixed seed") {
  SimulationConfig config = preset_config("mchain-janson");
  SoundnessReport a = run_simulation(config, 2000, 31337);
  SoundnessReport b = run_simulation(config, 2000, 31337);
  CHECK(a.curve.empirical == b.curve.empirical);
  CHECK(a.bounds[0].bound == b.bounds[0].bound);
}
