#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "radonsvm/geometry.hpp"
#include "radonsvm/numerics.hpp"

namespace radonsvm {

struct LabeledPointSet {
  std::size_t dim = 0;
  std::vector<Vec> points;
  std::vector<int> labels;  // +1 / -1

  std::size_t size() const { return points.size(); }
  PointSet class_points(int label) const;
};

void validate_labeled_set(const LabeledPointSet& d);

struct SvmSolution {
  Vec w;
  double b = 0.0;
  std::vector<double> alphas;
  std::vector<std::size_t> support_indices;  // margin criterion at the default tau
  double margin = 0.0;                       // slab width 2/||w||
  // Solver diagnostics: pair updates spent and the final maximal KKT
  // violation of the dual iterate (0 for the exact brute-force path).
  std::size_t iterations = 0;
  double achieved_gap = 0.0;
};

struct KktReport {
  double stationarity_residual = 0.0;       // ||w - sum alpha_i y_i x_i||
  double balance_residual = 0.0;            // |sum alpha_i y_i|
  double worst_primal_violation = 0.0;      // max(0, 1 - min_i y_i(w.x_i + b))
  double complementary_slackness_worst = 0.0;
  Vec constraint_values;                    // margin slacks y_i(w.x_i + b) - 1

  /// Pass rule at tolerance t. Residuals that scale with ||w|| or the alphas
  /// are compared relative to those scales, so small-margin solutions are not
  /// rejected for carrying large multipliers.
  bool passes(double t) const;

 private:
  friend KktReport kkt_check(const SvmSolution&, const LabeledPointSet&);
  double w_scale_ = 1.0;
  double alpha_scale_ = 1.0;
};

struct SupportSets {
  std::vector<std::size_t> margin_set;  // |y_i(w.x_i+b) - 1| <= tau
  std::vector<std::size_t> dual_set;    // alpha_i > tau * max alpha
  bool degenerate = false;              // the two sets differ
};

/// Thrown when the pair-update budget runs out; carries the best iterate so
/// callers can decide whether its precision is usable.
class TrainingBudgetError : public std::runtime_error {
 public:
  TrainingBudgetError(SvmSolution best, KktReport report);
  SvmSolution best;
  KktReport report;
};

inline constexpr double kDefaultTrainTol = 1e-10;
inline constexpr std::size_t kDefaultMaxIter = 1000000;
inline constexpr double kDefaultSupportTau = 1e-8;

/// Strict-separation feasibility y_i(w.x_i + b) >= 1, decided by phase-one
/// simplex on the homogenized system; equivalent to disjoint class hulls.
bool is_linearly_separable(const LabeledPointSet& d);

/// Hard-margin training by two-coordinate dual ascent on the maximal
/// violating pair (ties to the lowest index), preserving sum alpha_i y_i = 0
/// exactly. The offset uses the midpoint rule over the extreme functional
/// margins, which reproduces the canonical scaling at optimality.
SvmSolution train_hard_margin(const LabeledPointSet& d, double tol = kDefaultTrainTol,
                              std::size_t max_iter = kDefaultMaxIter);

/// Exhaustive oracle: tries every candidate support subset of size 2..n+1
/// containing both classes, solves its equality-constrained stationarity
/// system, and keeps the KKT-feasible candidate of maximal margin. Guarded to
/// 25 points.
SvmSolution brute_force_train(const LabeledPointSet& d);

SupportSets support_vectors(const SvmSolution& s, const LabeledPointSet& d,
                            double tau = kDefaultSupportTau);

KktReport kkt_check(const SvmSolution& s, const LabeledPointSet& d);

}  // namespace radonsvm
