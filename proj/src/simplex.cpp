#include "graphdep/simplex.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace graphdep {

namespace {

constexpr double kEps = 1e-9;

// Full-tableau simplex for min cost.x over the rows of `tab` with the given
// basis. Columns in [ban_from, ncols) may not enter the basis. Reduced costs
// are recomputed from the cost vector each iteration; with <= ~30 rows this
// is cheap and avoids objective-row drift.
void run_simplex(std::vector<std::vector<double>>& tab, std::vector<int>& basis,
                 const std::vector<double>& cost, int ncols, int ban_from) {
  int nrows = static_cast<int>(tab.size());
  for (int iter = 0;; ++iter) {
    if (iter > 100000) throw std::runtime_error("simplex: iteration limit");

    int enter = -1;
    for (int j = 0; j < ncols; ++j) {
      if (j >= ban_from) break;
      double reduced = cost[j];
      for (int i = 0; i < nrows; ++i) reduced -= cost[basis[i]] * tab[i][j];
      if (reduced < -kEps) {  // Bland: first improving index
        enter = j;
        break;
      }
    }
    if (enter < 0) return;  // optimal

    int leave = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < nrows; ++i) {
      if (tab[i][enter] > kEps) {
        double ratio = tab[i][ncols] / tab[i][enter];
        if (ratio < best_ratio - kEps ||
            (ratio < best_ratio + kEps && (leave < 0 || basis[i] < basis[leave]))) {
          best_ratio = ratio;
          leave = i;
        }
      }
    }
    if (leave < 0) throw std::runtime_error("simplex: unbounded problem");

    double pivot = tab[leave][enter];
    for (int j = 0; j <= ncols; ++j) tab[leave][j] /= pivot;
    for (int i = 0; i < nrows; ++i) {
      if (i == leave) continue;
      double factor = tab[i][enter];
      if (std::abs(factor) < kEps) continue;
      for (int j = 0; j <= ncols; ++j) tab[i][j] -= factor * tab[leave][j];
    }
    basis[leave] = enter;
  }
}

}  // namespace

LpResult solve_covering_lp(const std::vector<std::vector<double>>& a,
                           const std::vector<double>& b,
                           const std::vector<double>& c) {
  int nrows = static_cast<int>(a.size());
  int nx = static_cast<int>(c.size());
  // Columns: x | surplus | artificial, one surplus and one artificial per row.
  int ncols = nx + 2 * nrows;
  std::vector<std::vector<double>> tab(nrows, std::vector<double>(ncols + 1, 0.0));
  std::vector<int> basis(nrows);
  for (int i = 0; i < nrows; ++i) {
    double rhs = b[i];
    double sign = rhs >= 0 ? 1.0 : -1.0;  // keep rhs nonnegative for phase 1
    for (int j = 0; j < nx; ++j) tab[i][j] = sign * a[i][j];
    tab[i][nx + i] = -sign;        // surplus: A x - s = b
    tab[i][nx + nrows + i] = 1.0;  // artificial
    tab[i][ncols] = sign * rhs;
    basis[i] = nx + nrows + i;
  }

  std::vector<double> phase1_cost(ncols, 0.0);
  for (int i = 0; i < nrows; ++i) phase1_cost[nx + nrows + i] = 1.0;
  run_simplex(tab, basis, phase1_cost, ncols, ncols);

  double infeas = 0.0;
  for (int i = 0; i < nrows; ++i) {
    if (basis[i] >= nx + nrows) infeas += tab[i][ncols];
  }
  if (infeas > 1e-7) return {};  // infeasible

  // Pivot any zero-level artificial out of the basis when possible.
  for (int i = 0; i < nrows; ++i) {
    if (basis[i] < nx + nrows) continue;
    for (int j = 0; j < nx + nrows; ++j) {
      if (std::abs(tab[i][j]) > kEps) {
        double pivot = tab[i][j];
        for (int k = 0; k <= ncols; ++k) tab[i][k] /= pivot;
        for (int r = 0; r < nrows; ++r) {
          if (r == i) continue;
          double factor = tab[r][j];
          if (std::abs(factor) < kEps) continue;
          for (int k = 0; k <= ncols; ++k) tab[r][k] -= factor * tab[i][k];
        }
        basis[i] = j;
        break;
      }
    }
  }

  std::vector<double> phase2_cost(ncols, 0.0);
  for (int j = 0; j < nx; ++j) phase2_cost[j] = c[j];
  run_simplex(tab, basis, phase2_cost, ncols, nx + nrows);

  LpResult result;
  result.optimal = true;
  result.solution.assign(nx, 0.0);
  for (int i = 0; i < nrows; ++i) {
    if (basis[i] < nx) result.solution[basis[i]] = tab[i][ncols];
  }
  for (int j = 0; j < nx; ++j) result.objective += c[j] * result.solution[j];
  return result;
}

}  // namespace graphdep
