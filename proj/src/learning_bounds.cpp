#include "graphdep/learning_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace graphdep {

namespace {

void check_delta(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw ValidationError("confidence delta must lie in (0, 1), got " +
                          std::to_string(delta));
  }
}

}  // namespace

StabilityProfile make_stability_profile(const std::function<double(int)>& beta,
                                        int n, int degree, double loss_bound) {
  if (n < 1) throw ValidationError("sample size must be >= 1");
  if (degree < 0) throw ValidationError("degree must be >= 0");
  if (degree >= n) throw ValidationError("degree must be < sample size");
  if (loss_bound <= 0) throw ValidationError("loss bound must be positive");
  StabilityProfile profile;
  profile.beta_n = beta(n);
  profile.beta_n_delta = 0.0;
  for (int i = 0; i <= degree; ++i) {
    profile.beta_n_delta = std::max(profile.beta_n_delta, beta(n - i));
  }
  profile.delta_max_degree = degree;
  profile.loss_bound = loss_bound;
  if (profile.beta_n < 0) throw ValidationError("stability must be nonnegative");
  return profile;
}

double linear_class_rademacher(double B, double Gamma, double chi_f, int n) {
  if (B <= 0 || Gamma <= 0 || chi_f <= 0 || n <= 0) {
    throw ValidationError("linear_class_rademacher requires positive inputs");
  }
  return B * Gamma * std::sqrt(chi_f / static_cast<double>(n));
}

GenBoundValue frac_rademacher_gen_bound(const GenBoundInputs& inputs, double M,
                                        bool empirical_variant) {
  check_delta(inputs.confidence);
  if (inputs.sample_size < 1) throw ValidationError("sample size must be >= 1");
  if (M <= 0) throw ValidationError("loss bound must be positive");
  if (inputs.chi_f < 1.0) throw ValidationError("chi_f must be >= 1");
  if (inputs.rademacher_term < 0 || inputs.empirical_risk < 0) {
    throw ValidationError("risk and complexity terms must be nonnegative");
  }

  double n = static_cast<double>(inputs.sample_size);
  double base = inputs.chi_f / (2.0 * n);
  double confidence_term =
      empirical_variant
          ? 3.0 * M * std::sqrt(base * std::log(2.0 / inputs.confidence))
          : M * std::sqrt(base * std::log(1.0 / inputs.confidence));
  double value = inputs.empirical_risk + 2.0 * inputs.rademacher_term + confidence_term;
  return {value, value > M};
}

StabilityBound stability_gen_bound(double r_hat, const StabilityProfile& profile,
                                   double lambda_g, int n, double delta) {
  check_delta(delta);
  if (n < 1) throw ValidationError("sample size must be >= 1");
  if (lambda_g < 0) throw ValidationError("forest complexity must be nonnegative");
  if (profile.beta_n_delta < profile.beta_n) {
    throw ValidationError("beta_{n,Delta} cannot be smaller than beta_n");
  }

  StabilityBound out;
  out.lipschitz_coefficient = 4.0 * profile.beta_n + profile.loss_bound / n;
  out.expectation_term =
      2.0 * profile.beta_n_delta * (profile.delta_max_degree + 1);
  out.deviation_term = (4.0 * n * profile.beta_n + profile.loss_bound) / n *
                       std::sqrt(lambda_g / 2.0 * std::log(1.0 / delta));
  out.value = r_hat + out.expectation_term + out.deviation_term;
  out.vacuous = out.value > profile.loss_bound;
  return out;
}

namespace {

GenBoundValue pairwise_linear_bound(double B, double Gamma, int m, double r_hat,
                                    double delta) {
  check_delta(delta);
  if (B <= 0 || Gamma <= 0) throw ValidationError("norm bounds must be positive");
  if (m < 1) throw ValidationError("class or sample count must be >= 1");
  double md = static_cast<double>(m);
  double value = r_hat + 4.0 * B * Gamma / std::sqrt(md) +
                 3.0 * std::sqrt(std::log(2.0 / delta) / (2.0 * md));
  return {value, value > 1.0};  // zero-one pair loss
}

}  // namespace

GenBoundValue bipartite_ranking_bound(double B, double Gamma, int m_plus, int m_minus,
                                      double r_hat, double delta) {
  if (m_plus < 1 || m_minus < 1) {
    throw ValidationError("both classes need at least one instance");
  }
  return pairwise_linear_bound(B, Gamma, std::min(m_plus, m_minus), r_hat, delta);
}

GenBoundValue multiclass_bound(double B, double Gamma, int m, int k_classes,
                               double r_hat, double delta) {
  if (k_classes < 2) throw ValidationError("multiclass bound needs K >= 2");
  return pairwise_linear_bound(B, Gamma, m, r_hat, delta);
}

GenBoundValue m_dependent_stability_bound(double r_hat, const StabilityProfile& profile,
                                          int m, int n, double delta) {
  check_delta(delta);
  if (m < 1) throw ValidationError("dependence range must be >= 1");
  if (n <= 2 * m) throw ValidationError("sample size must exceed 2m");
  if (profile.delta_max_degree != 2 * m) {
    throw ValidationError("profile must be built with degree 2m");
  }
  double value = r_hat +
                 2.0 * profile.beta_n_delta * (2.0 * m + 1.0) +
                 (4.0 * n * profile.beta_n + profile.loss_bound) *
                     std::sqrt(2.0 * m / static_cast<double>(n) * std::log(1.0 / delta));
  return {value, value > profile.loss_bound};
}

double auc_empirical_risk(const std::vector<double>& positive_scores,
                          const std::vector<double>& negative_scores) {
  if (positive_scores.empty() || negative_scores.empty()) {
    throw ValidationError("both score lists must be nonempty");
  }
  long long errors = 0;
  for (double sp : positive_scores) {
    for (double sn : negative_scores) {
      if (sp <= sn) ++errors;
    }
  }
  return static_cast<double>(errors) /
         (static_cast<double>(positive_scores.size()) * negative_scores.size());
}

double multiclass_empirical_risk(const std::vector<std::vector<double>>& scores,
                                 const std::vector<int>& labels) {
  if (scores.empty()) throw ValidationError("score matrix must be nonempty");
  size_t k = scores.front().size();
  if (k < 2) throw ValidationError("need at least two classes");
  if (labels.size() != scores.size()) {
    throw ValidationError("one label per score row required");
  }
  long long errors = 0;
  for (size_t i = 0; i < scores.size(); ++i) {
    if (scores[i].size() != k) throw ValidationError("ragged score matrix");
    int y = labels[i];
    if (y < 0 || y >= static_cast<int>(k)) {
      throw ValidationError("label out of range at row " + std::to_string(i));
    }
    for (size_t other = 0; other < k; ++other) {
      if (static_cast<int>(other) == y) continue;
      if (scores[i][y] <= scores[i][other]) ++errors;
    }
  }
  return static_cast<double>(errors) /
         (static_cast<double>(scores.size()) * (k - 1));
}

}  // namespace graphdep
