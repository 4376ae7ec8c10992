#include "radonsvm/svm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "radonsvm/linprog.hpp"

namespace radonsvm {

PointSet LabeledPointSet::class_points(int label) const {
  PointSet ps{dim, {}};
  for (std::size_t i = 0; i < points.size(); ++i)
    if (labels[i] == label) ps.points.push_back(points[i]);
  return ps;
}

void validate_labeled_set(const LabeledPointSet& d) {
  if (d.points.size() != d.labels.size())
    throw std::invalid_argument("labels and points disagree in count");
  for (const Vec& p : d.points)
    if (p.size() != d.dim) throw std::invalid_argument("point dimension mismatch");
  for (int y : d.labels)
    if (y != 1 && y != -1) throw std::invalid_argument("labels must be +1 or -1");
}

TrainingBudgetError::TrainingBudgetError(SvmSolution best_in, KktReport report_in)
    : std::runtime_error("iteration budget exhausted"),
      best(std::move(best_in)),
      report(std::move(report_in)) {}

bool KktReport::passes(double t) const {
  return stationarity_residual <= t * w_scale_ && balance_residual <= t * alpha_scale_ &&
         worst_primal_violation <= t && complementary_slackness_worst <= t * alpha_scale_;
}

namespace {

void require_both_classes(const LabeledPointSet& d) {
  bool pos = false, neg = false;
  for (int y : d.labels) (y > 0 ? pos : neg) = true;
  if (!pos || !neg) throw std::invalid_argument("training data needs both classes");
}

Vec recover_w(const LabeledPointSet& d, const std::vector<double>& alphas) {
  Vec w(d.dim, 0.0);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (alphas[i] == 0.0) continue;
    double c = alphas[i] * d.labels[i];
    for (std::size_t j = 0; j < d.dim; ++j) w[j] += c * d.points[i][j];
  }
  return w;
}

double midpoint_offset(const LabeledPointSet& d, const Vec& w) {
  double min_pos = std::numeric_limits<double>::infinity();
  double max_neg = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < d.size(); ++i) {
    double s = dot(w, d.points[i]);
    if (d.labels[i] > 0)
      min_pos = std::min(min_pos, s);
    else
      max_neg = std::max(max_neg, s);
  }
  return -(max_neg + min_pos) / 2.0;
}

std::vector<std::size_t> margin_support_set(const LabeledPointSet& d, const Vec& w, double b,
                                            double tau) {
  std::vector<std::size_t> set;
  for (std::size_t i = 0; i < d.size(); ++i) {
    double fm = d.labels[i] * (dot(w, d.points[i]) + b);
    if (std::abs(fm - 1.0) <= tau) set.push_back(i);
  }
  return set;
}

SvmSolution assemble_solution(const LabeledPointSet& d, std::vector<double> alphas,
                              std::size_t iterations, double gap) {
  SvmSolution s;
  s.w = recover_w(d, alphas);
  s.b = midpoint_offset(d, s.w);
  s.alphas = std::move(alphas);
  s.margin = 2.0 / norm(s.w);
  s.support_indices = margin_support_set(d, s.w, s.b, kDefaultSupportTau);
  s.iterations = iterations;
  s.achieved_gap = gap;
  return s;
}

}  // namespace

bool is_linearly_separable(const LabeledPointSet& d) {
  validate_labeled_set(d);
  require_both_classes(d);
  const std::size_t m = d.size(), n = d.dim;
  // Free variables split into nonnegative pairs; one surplus per constraint:
  // y_i((wp-wm).x_i + bp-bm) - s_i = 1.
  Matrix eq(m, 2 * n + 2 + m);
  Vec rhs(m, 1.0);
  for (std::size_t i = 0; i < m; ++i) {
    double y = d.labels[i];
    for (std::size_t j = 0; j < n; ++j) {
      eq(i, j) = y * d.points[i][j];
      eq(i, n + j) = -y * d.points[i][j];
    }
    eq(i, 2 * n) = y;
    eq(i, 2 * n + 1) = -y;
    eq(i, 2 * n + 2 + i) = -1.0;
  }
  return phase_one_feasible(eq, rhs).feasible;
}

SvmSolution train_hard_margin(const LabeledPointSet& d, double tol, std::size_t max_iter) {
  validate_labeled_set(d);
  require_both_classes(d);
  if (tol <= 0.0) throw std::invalid_argument("tol must be positive");
  if (!is_linearly_separable(d)) throw std::runtime_error("not linearly separable");

  const std::size_t m = d.size();
  std::vector<double> gram(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      gram[i * m + j] = gram[j * m + i] = dot(d.points[i], d.points[j]);

  std::vector<double> alpha(m, 0.0);
  std::vector<double> score(m, 0.0);  // cached w.x_i, refreshed periodically
  const std::vector<int>& y = d.labels;

  auto refresh_scores = [&] {
    for (std::size_t t = 0; t < m; ++t) {
      double s = 0.0, c = 0.0;  // Kahan compensation for the long dual sums
      for (std::size_t j = 0; j < m; ++j) {
        double term = alpha[j] * y[j] * gram[t * m + j] - c;
        double next = s + term;
        c = (next - s) - term;
        s = next;
      }
      score[t] = s;
    }
  };

  // Violating-pair selection over the index sets that still have room to
  // move: v_t = y_t - w.x_t must satisfy max over I_up <= min over I_low at
  // optimality, with both pinched onto the offset b.
  auto select_pair = [&](std::size_t& i, std::size_t& j, double& gap) {
    double up = -std::numeric_limits<double>::infinity();
    double low = std::numeric_limits<double>::infinity();
    i = j = m;
    for (std::size_t t = 0; t < m; ++t) {
      double v = y[t] - score[t];
      if (y[t] > 0 || alpha[t] > 0.0) {
        if (v > up) {
          up = v;
          i = t;
        }
      }
      if (y[t] < 0 || alpha[t] > 0.0) {
        if (v < low) {
          low = v;
          j = t;
        }
      }
    }
    gap = up - low;
  };

  const std::size_t refresh_every = 2048;
  std::size_t iter = 0;
  double gap = std::numeric_limits<double>::infinity();
  double best_gap = std::numeric_limits<double>::infinity();
  std::vector<double> best_alpha = alpha;
  bool converged = false;

  while (iter < max_iter) {
    std::size_t i, j;
    select_pair(i, j, gap);
    if (gap < tol) {
      refresh_scores();
      select_pair(i, j, gap);
      if (gap < tol) {
        converged = true;
        break;
      }
    }
    if (gap < best_gap) {
      best_gap = gap;
      best_alpha = alpha;
    }

    double eta = gram[i * m + i] + gram[j * m + j] - 2.0 * gram[i * m + j];
    double step = gap / std::max(eta, 1e-12);
    if (y[i] < 0) step = std::min(step, alpha[i]);
    if (y[j] > 0) step = std::min(step, alpha[j]);
    if (step <= 0.0) {
      refresh_scores();
      ++iter;
      continue;
    }

    alpha[i] += y[i] * step;
    alpha[j] -= y[j] * step;
    if (alpha[i] < 0.0) alpha[i] = 0.0;
    if (alpha[j] < 0.0) alpha[j] = 0.0;
    for (std::size_t t = 0; t < m; ++t) score[t] += step * (gram[t * m + i] - gram[t * m + j]);

    if (++iter % refresh_every == 0) refresh_scores();
  }

  if (!converged) {
    if (gap < best_gap) best_alpha = alpha;
    SvmSolution best = assemble_solution(d, std::move(best_alpha), iter, best_gap);
    KktReport rep = kkt_check(best, d);
    throw TrainingBudgetError(std::move(best), std::move(rep));
  }
  return assemble_solution(d, std::move(alpha), iter, gap);
}

SvmSolution brute_force_train(const LabeledPointSet& d) {
  validate_labeled_set(d);
  require_both_classes(d);
  const std::size_t m = d.size(), n = d.dim;
  if (m > 25) throw std::runtime_error("brute-force training guard exceeded (more than 25 points)");
  if (!is_linearly_separable(d)) throw std::runtime_error("not linearly separable");

  const double feas_slack = 1e-9;
  bool found = false;
  double best_norm2 = std::numeric_limits<double>::infinity();
  std::vector<double> best_alpha;
  double best_b = 0.0;

  std::vector<std::size_t> subset;
  auto advance = [&subset, m]() -> bool {
    const std::size_t k = subset.size();
    for (std::size_t i = k; i-- > 0;) {
      if (subset[i] + (k - i) < m) {
        ++subset[i];
        for (std::size_t j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
        return true;
      }
    }
    return false;
  };

  const std::size_t max_size = std::min(n + 1, m);
  for (std::size_t s = 2; s <= max_size; ++s) {
    subset.resize(s);
    for (std::size_t i = 0; i < s; ++i) subset[i] = i;
    do {
      bool pos = false, neg = false;
      for (std::size_t idx : subset) (d.labels[idx] > 0 ? pos : neg) = true;
      if (pos && neg) {
        // Stationarity restricted to the candidate set: margins are exactly 1
        // on the subset and the dual balance holds.
        Matrix sys(s + 1, s + 1);
        Vec rhs(s + 1, 0.0);
        for (std::size_t r = 0; r < s; ++r) {
          for (std::size_t c = 0; c < s; ++c)
            sys(r, c) = d.labels[subset[c]] * dot(d.points[subset[r]], d.points[subset[c]]);
          sys(r, s) = 1.0;
          rhs[r] = d.labels[subset[r]];
        }
        for (std::size_t c = 0; c < s; ++c) sys(s, c) = d.labels[subset[c]];

        bool usable = true;
        Vec sol;
        try {
          sol = solve_linear(sys, rhs);
        } catch (const std::runtime_error&) {
          usable = false;  // degenerate candidate support set
        }
        if (usable)
          for (std::size_t c = 0; c < s; ++c)
            if (sol[c] < 0.0) usable = false;

        if (usable) {
          std::vector<double> alphas(m, 0.0);
          for (std::size_t c = 0; c < s; ++c) alphas[subset[c]] = sol[c];
          Vec w = recover_w(d, alphas);
          double b = sol[s];
          bool feasible = true;
          for (std::size_t i = 0; i < m && feasible; ++i)
            if (d.labels[i] * (dot(w, d.points[i]) + b) < 1.0 - feas_slack) feasible = false;
          if (feasible) {
            double n2 = dot(w, w);
            if (!found || n2 < best_norm2) {
              found = true;
              best_norm2 = n2;
              best_alpha = std::move(alphas);
              best_b = b;
            }
          }
        }
      }
    } while (advance());
  }
  if (!found) throw std::runtime_error("no feasible support subset found");

  SvmSolution sol;
  sol.w = recover_w(d, best_alpha);
  sol.b = best_b;
  sol.alphas = std::move(best_alpha);
  sol.margin = 2.0 / norm(sol.w);
  sol.support_indices = margin_support_set(d, sol.w, sol.b, kDefaultSupportTau);
  return sol;
}

SupportSets support_vectors(const SvmSolution& s, const LabeledPointSet& d, double tau) {
  validate_labeled_set(d);
  SupportSets sets;
  sets.margin_set = margin_support_set(d, s.w, s.b, tau);
  double amax = 0.0;
  for (double a : s.alphas) amax = std::max(amax, a);
  for (std::size_t i = 0; i < s.alphas.size(); ++i)
    if (s.alphas[i] > tau * amax && amax > 0.0) sets.dual_set.push_back(i);
  sets.degenerate = sets.margin_set != sets.dual_set;
  return sets;
}

KktReport kkt_check(const SvmSolution& s, const LabeledPointSet& d) {
  validate_labeled_set(d);
  KktReport rep;
  Vec wd = recover_w(d, s.alphas);
  rep.stationarity_residual = norm(subtract(s.w, wd));
  double bal = 0.0, amax = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    bal += s.alphas[i] * d.labels[i];
    amax = std::max(amax, s.alphas[i]);
  }
  rep.balance_residual = std::abs(bal);
  rep.constraint_values.resize(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    double slack = d.labels[i] * (dot(s.w, d.points[i]) + s.b) - 1.0;
    rep.constraint_values[i] = slack;
    rep.worst_primal_violation = std::max(rep.worst_primal_violation, -slack);
    rep.complementary_slackness_worst =
        std::max(rep.complementary_slackness_worst, std::abs(s.alphas[i] * slack));
  }
  rep.worst_primal_violation = std::max(rep.worst_primal_violation, 0.0);
  rep.w_scale_ = 1.0 + norm(s.w);
  rep.alpha_scale_ = 1.0 + amax;
  return rep;
}

}  // namespace radonsvm
