#include "radonsvm/linprog.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace radonsvm {

PhaseOneResult phase_one_feasible(const Matrix& eq, const Vec& rhs, double feas_tol) {
  const std::size_t m = eq.rows();
  const std::size_t n = eq.cols();
  if (rhs.size() != m) throw std::invalid_argument("phase_one: rhs size mismatch");

  // Tableau layout: n structural columns, m artificial columns, one rhs column.
  const std::size_t width = n + m + 1;
  std::vector<double> tab(m * width, 0.0);
  auto at = [&](std::size_t i, std::size_t j) -> double& { return tab[i * width + j]; };

  double rhs_scale = 1.0;
  for (std::size_t i = 0; i < m; ++i) rhs_scale = std::max(rhs_scale, std::abs(rhs[i]));

  for (std::size_t i = 0; i < m; ++i) {
    double sign = rhs[i] < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n; ++j) at(i, j) = sign * eq(i, j);
    at(i, n + i) = 1.0;
    at(i, n + m) = sign * rhs[i];
  }

  std::vector<std::size_t> basis(m);
  // Objective row: minimize the artificial sum. Starting from the artificial
  // basis the reduced cost of column j is -sum_i tab(i, j).
  std::vector<double> cost(width, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    basis[i] = n + i;
    for (std::size_t j = 0; j < width; ++j) cost[j] -= at(i, j);
    cost[n + i] += 1.0;  // artificial columns carry unit cost
  }

  const double enter_eps = 1e-12;
  const double pivot_eps = 1e-11;
  const std::size_t max_pivots = 10000 + 200 * (m + n);

  for (std::size_t iter = 0; iter < max_pivots; ++iter) {
    std::size_t enter = width;  // Bland: lowest index with negative reduced cost
    for (std::size_t j = 0; j < n + m; ++j) {
      if (cost[j] < -enter_eps) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    // Rows whose entry is tiny relative to the column are skipped in the
    // ratio test: such entries are usually cancellation noise, and pivoting
    // on them injects their relative error into the whole tableau.
    double colmax = 0.0;
    for (std::size_t i = 0; i < m; ++i) colmax = std::max(colmax, std::abs(at(i, enter)));
    const double eligible = std::max(pivot_eps, 1e-7 * colmax);

    std::size_t leave = m;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      double a = at(i, enter);
      if (a > eligible) {
        double ratio = at(i, n + m) / a;
        if (ratio < best_ratio - 1e-15 ||
            (std::abs(ratio - best_ratio) <= 1e-15 &&
             (leave == m || basis[i] < basis[leave]))) {
          best_ratio = ratio;
          leave = i;
        }
      }
    }
    if (leave == m) {
      // Unbounded entering direction cannot happen in a phase-one problem
      // with a bounded objective; treat as a numerically dead column.
      cost[enter] = 0.0;
      continue;
    }

    double p = at(leave, enter);
    for (std::size_t j = 0; j < width; ++j) at(leave, j) /= p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave) continue;
      double f = at(i, enter);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < width; ++j) at(i, j) -= f * at(leave, j);
    }
    double fc = cost[enter];
    if (fc != 0.0)
      for (std::size_t j = 0; j < width; ++j) cost[j] -= fc * at(leave, j);
    basis[leave] = enter;
  }

  PhaseOneResult res;
  res.x.assign(n, 0.0);
  double artificial_sum = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    double value = at(i, n + m);
    if (basis[i] < n)
      res.x[basis[i]] = value;
    else
      artificial_sum += std::abs(value);
  }
  res.infeasibility = artificial_sum;
  res.feasible = artificial_sum <= feas_tol * rhs_scale;
  return res;
}

}  // namespace radonsvm
