#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "radonsvm/geometry.hpp"
#include "radonsvm/svm.hpp"

namespace radonsvm {

struct ConfigurationReport {
  std::size_t n_pos_sv = 0;
  std::size_t n_neg_sv = 0;
  Vec radon_point;         // on the separating hyperplane; empty if unavailable
  bool hulls_intersect = false;
  bool unique_point = false;
  bool strong_gp_condition_i = false;   // no parallel flats among support vectors
  bool strong_gp_condition_ii = false;  // unique nonnegative dual representation
  bool exceeds_bound = false;           // n_pos_sv + n_neg_sv > dim + 1
  std::vector<std::string> degeneracy_flags;
};

struct StabilityReport {
  bool stable = false;
  bool has_counterexample = false;
  std::size_t failing_trial = 0;
  std::string reason;
  std::vector<std::size_t> baseline_set;
  std::vector<std::size_t> observed_set;
};

struct ShatterReport {
  bool shatterable = false;
  std::vector<int> witness_labels;  // one unrealizable labeling on failure
};

enum class PrecisionCause {
  none,                   // support count within the dim+1 bound
  parallel_flats,         // strong general position condition (i) fails
  rank_deficient_duals,   // condition (ii) fails
  insufficient_precision  // both conditions hold: solver precision too low
};

struct PrecisionAuditRecord {
  std::size_t support_count = 0;
  std::size_t bound = 0;         // dim + 1
  double effective_tau = 0.0;    // margin-membership width actually used
  PrecisionCause cause = PrecisionCause::none;
  double recommended_tol = 0.0;  // tighter solver tolerance when cause is precision
  std::string detail;
};

/// The common projection of the dual-weighted class barycenters onto the
/// separating hyperplane. Requires the solution to pass the KKT check at
/// 1e-8; verifies the two class projections agree and that the point lies in
/// both projected support-vector hulls.
Vec radon_point_from_duals(const SvmSolution& s, const LabeledPointSet& d);

ConfigurationReport classify_configuration(const SvmSolution& s, const LabeledPointSet& d,
                                           double tau = kDefaultSupportTau);

/// Rank test on the projected direction spans of the two support-vector
/// flats: they meet only at the origin iff the projected hulls meet in a
/// single point.
bool verify_unique_radon_point(const SvmSolution& s, const LabeledPointSet& d,
                               double tau = kDefaultSupportTau);

/// Retrains `trials` independent perturbations (every point displaced by a
/// uniform vector of norm <= eps) and reports whether the support-vector
/// index set survives each one. Trial t draws from the (seed, t) stream.
StabilityReport perturbation_stability(const LabeledPointSet& d, double eps,
                                       std::size_t trials, std::uint64_t seed);

/// True iff every labeling of p is linearly separable. Labelings run in Gray
/// code order and stop at the first failure; for |p| >= dim+2 the Radon
/// partition labeling is tried first. Guarded to 20 points.
ShatterReport shatter_check(const PointSet& p);

/// Explains a support-vector count above the dim+1 bound: parallel flats,
/// a rank-deficient dual representation, or - when the configuration is
/// genuinely generic - insufficient solver precision. Margin membership is
/// widened to the precision the solver actually achieved, so a loosely
/// trained solution is audited at its own noise level.
PrecisionAuditRecord precision_audit(const SvmSolution& s, const LabeledPointSet& d,
                                     double tau = kDefaultSupportTau);

/// The equidistant-simplex instance: k vertices pairwise sqrt(2) apart in
/// R^n, the first i labeled positive. Uses basis-vector coordinates in R^k
/// (zero padded) when k <= n and the intrinsic R^(k-1) embedding when
/// k = n+1. Every vertex trains to a support vector, realizing the (i, k-i)
/// split.
LabeledPointSet simplex_instance(std::size_t n, std::size_t k, std::size_t i);

}  // namespace radonsvm
