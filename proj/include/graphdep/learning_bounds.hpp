#pragma once

#include <functional>
#include <vector>

#include "graphdep/errors.hpp"

namespace graphdep {

/// Uniform-stability description of a learning algorithm, supplied by the
/// caller as known quantities (never estimated from data here).
struct StabilityProfile {
  double beta_n = 0.0;        // stability at sample size n
  double beta_n_delta = 0.0;  // max of beta_{n-i} over i in [0, degree]
  int delta_max_degree = 0;   // max degree of the dependency graph
  double loss_bound = 1.0;    // M
};

/// Evaluates a closed-form beta profile at sizes n, n-1, ..., n-degree.
StabilityProfile make_stability_profile(const std::function<double(int)>& beta,
                                        int n, int degree, double loss_bound);

/// B * Gamma * sqrt(chi_f / n): fractional Rademacher complexity of
/// norm-bounded linear functions over features of norm at most Gamma.
double linear_class_rademacher(double B, double Gamma, double chi_f, int n);

struct GenBoundInputs {
  double empirical_risk = 0.0;
  double confidence = 0.05;      // delta in (0, 1)
  int sample_size = 1;           // n
  double rademacher_term = 0.0;  // theoretical or empirical, per variant
  double chi_f = 1.0;
};

/// A bound value above the loss bound certifies nothing; it is reported raw
/// with `vacuous` set.
struct GenBoundValue {
  double value = 0.0;
  bool vacuous = false;
};

/// Risk bound via fractional Rademacher complexity:
///   expectation variant: R_hat + 2 r + M sqrt(chi_f/(2n) ln(1/delta))
///   empirical variant:   R_hat + 2 r + 3 M sqrt(chi_f/(2n) ln(2/delta))
GenBoundValue frac_rademacher_gen_bound(const GenBoundInputs& inputs, double M,
                                        bool empirical_variant);

/// Stability-based risk bound
///   R_hat + 2 beta_{n,D} (D+1) + ((4 n beta_n + M)/n) sqrt(Lambda/2 ln(1/delta))
/// with the two additive correction terms and the per-coordinate Lipschitz
/// coefficient 4 beta_n + M/n exposed.
struct StabilityBound {
  double value = 0.0;
  double expectation_term = 0.0;
  double deviation_term = 0.0;
  double lipschitz_coefficient = 0.0;
  bool vacuous = false;
};
StabilityBound stability_gen_bound(double r_hat, const StabilityProfile& profile,
                                   double lambda_g, int n, double delta);

/// R_hat + 4 B Gamma / sqrt(m) + 3 sqrt(ln(2/delta) / (2m)), m = min class size.
GenBoundValue bipartite_ranking_bound(double B, double Gamma, int m_plus, int m_minus,
                                      double r_hat, double delta);

/// Same shape with m = number of examples; requires k_classes >= 2.
GenBoundValue multiclass_bound(double B, double Gamma, int m, int k_classes,
                               double r_hat, double delta);

/// Stability bound specialised to m-dependent samples (Lambda <= 4 m n,
/// degree 2m): R_hat + 2 beta_{n,2m}(2m+1) + (4 n beta_n + M) sqrt(2m/n ln(1/delta)).
/// Requires m >= 1 and n > 2m; the profile must be built with degree 2m.
GenBoundValue m_dependent_stability_bound(double r_hat, const StabilityProfile& profile,
                                          int m, int n, double delta);

/// Pairwise ranking error (one minus AUC); ties count as full errors.
double auc_empirical_risk(const std::vector<double>& positive_scores,
                          const std::vector<double>& negative_scores);

/// Average number of rival classes scored at least as high as the true
/// class, normalised to [0, 1]. scores is m x K, labels in [0, K).
double multiclass_empirical_risk(const std::vector<std::vector<double>>& scores,
                                 const std::vector<int>& labels);

}  // namespace graphdep
