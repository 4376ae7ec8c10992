#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "radonsvm/svm.hpp"

namespace radonsvm {

struct ExperimentConfig {
  double a = 5.0;                    // half-width of the center square
  std::size_t points_per_class = 20;
  std::size_t dim = 2;
  double std_dev = 1.0;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  std::size_t max_rejections_per_trial = 10000;
  double train_tol = kDefaultTrainTol;
  std::size_t train_max_iter = kDefaultMaxIter;
  double tau = kDefaultSupportTau;
};

void validate_config(const ExperimentConfig& cfg);

struct CensusResult {
  ExperimentConfig config;
  // (positive SV count, negative SV count) -> number of trials
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> counts;
  std::map<std::size_t, std::size_t> total_by_sv_count;
  std::size_t rejected_trials = 0;  // redraws spent restoring separability
  std::size_t failed_trials = 0;
  std::vector<std::string> degeneracy_flags;

  struct TrialRecord {
    std::size_t trial = 0;
    std::size_t n_pos_sv = 0;
    std::size_t n_neg_sv = 0;
    double margin = 0.0;
    std::string flags;
    bool failed = false;
  };
  std::vector<TrialRecord> per_trial;

  std::size_t classified_trials() const { return per_trial.size() - failed_trials; }
  double fraction_with_sv_count(std::size_t count) const;
};

/// One separable draw: two centers uniform in [-a, a]^dim, points_per_class
/// Gaussian points around each (positive class first). Non-separable draws
/// redraw centers and points from the same (seed, trial_index) stream, so the
/// result is a pure function of the pair. Throws
/// "separability rejection limit" when the budget runs out.
LabeledPointSet generate_trial(const ExperimentConfig& cfg, std::size_t trial_index);

/// Trains and classifies every trial, tallying support-vector splits. Trials
/// run in parallel (capped by RADON_SVM_THREADS) with per-trial streams, so
/// the result is identical for any thread count.
CensusResult census(const ExperimentConfig& cfg);

}  // namespace radonsvm
