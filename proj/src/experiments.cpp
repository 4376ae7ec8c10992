#include "radonsvm/experiments.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "radonsvm/radon_analysis.hpp"
#include "radonsvm/rng.hpp"

namespace radonsvm {

void validate_config(const ExperimentConfig& cfg) {
  if (cfg.a <= 0.0) throw std::invalid_argument("a must be positive");
  if (cfg.std_dev <= 0.0) throw std::invalid_argument("std_dev must be positive");
  if (cfg.points_per_class == 0) throw std::invalid_argument("points_per_class must be positive");
  if (cfg.dim == 0) throw std::invalid_argument("dim must be positive");
  if (cfg.trials == 0) throw std::invalid_argument("trials must be at least 1");
  if (cfg.train_tol <= 0.0) throw std::invalid_argument("train_tol must be positive");
}

double CensusResult::fraction_with_sv_count(std::size_t count) const {
  auto it = total_by_sv_count.find(count);
  std::size_t hits = it == total_by_sv_count.end() ? 0 : it->second;
  std::size_t denom = classified_trials();
  return denom == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(denom);
}

namespace {

LabeledPointSet draw_instance(const ExperimentConfig& cfg, SplitMix64& rng) {
  LabeledPointSet d;
  d.dim = cfg.dim;
  Vec center_pos(cfg.dim), center_neg(cfg.dim);
  for (double& c : center_pos) c = rng.next_uniform(-cfg.a, cfg.a);
  for (double& c : center_neg) c = rng.next_uniform(-cfg.a, cfg.a);
  for (int side = 0; side < 2; ++side) {
    const Vec& center = side == 0 ? center_pos : center_neg;
    for (std::size_t p = 0; p < cfg.points_per_class; ++p) {
      Vec x(cfg.dim);
      for (std::size_t j = 0; j < cfg.dim; ++j)
        x[j] = center[j] + cfg.std_dev * rng.next_gaussian();
      d.points.push_back(std::move(x));
      d.labels.push_back(side == 0 ? 1 : -1);
    }
  }
  return d;
}

LabeledPointSet generate_counted(const ExperimentConfig& cfg, std::size_t trial_index,
                                 std::size_t& rejections) {
  SplitMix64 rng = SplitMix64::stream(cfg.seed, trial_index);
  for (std::size_t attempt = 0; attempt <= cfg.max_rejections_per_trial; ++attempt) {
    LabeledPointSet d = draw_instance(cfg, rng);
    if (is_linearly_separable(d)) {
      rejections = attempt;
      return d;
    }
  }
  throw std::runtime_error("separability rejection limit");
}

std::size_t thread_budget(std::size_t trials) {
  std::size_t n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("RADON_SVM_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) n = std::min<std::size_t>(n, static_cast<std::size_t>(v));
  }
  return std::max<std::size_t>(1, std::min(n, trials));
}

struct TrialOutcome {
  CensusResult::TrialRecord record;
  std::size_t rejections = 0;
  std::vector<std::string> flags;
};

TrialOutcome run_trial(const ExperimentConfig& cfg, std::size_t t) {
  TrialOutcome out;
  out.record.trial = t;
  std::ostringstream flag;
  try {
    LabeledPointSet data = generate_counted(cfg, t, out.rejections);
    SvmSolution sol;
    try {
      sol = train_hard_margin(data, cfg.train_tol, cfg.train_max_iter);
    } catch (const TrainingBudgetError& e) {
      // The best iterate is still usable for classification when its KKT
      // residuals resolve margins well below tau.
      if (!e.report.passes(1e-8)) throw;
      sol = e.best;
      flag << "budget exhausted; classified from best iterate (gap " << sol.achieved_gap << ")";
    }
    ConfigurationReport rep = classify_configuration(sol, data, cfg.tau);
    out.record.n_pos_sv = rep.n_pos_sv;
    out.record.n_neg_sv = rep.n_neg_sv;
    out.record.margin = sol.margin;
    if (rep.exceeds_bound) {
      if (flag.tellp() > 0) flag << "; ";
      flag << "support count " << rep.n_pos_sv + rep.n_neg_sv << " exceeds bound "
           << data.dim + 1;
    }
  } catch (const std::exception& e) {
    out.record.failed = true;
    out.record.flags = e.what();
    out.flags.push_back("trial " + std::to_string(t) + " failed: " + e.what());
    return out;
  }
  out.record.flags = flag.str();
  if (!out.record.flags.empty())
    out.flags.push_back("trial " + std::to_string(t) + ": " + out.record.flags);
  return out;
}

}  // namespace

LabeledPointSet generate_trial(const ExperimentConfig& cfg, std::size_t trial_index) {
  validate_config(cfg);
  std::size_t rejections = 0;
  return generate_counted(cfg, trial_index, rejections);
}

CensusResult census(const ExperimentConfig& cfg) {
  validate_config(cfg);
  CensusResult res;
  res.config = cfg;

  std::vector<TrialOutcome> outcomes(cfg.trials);
  const std::size_t workers = thread_budget(cfg.trials);
  if (workers == 1) {
    for (std::size_t t = 0; t < cfg.trials; ++t) outcomes[t] = run_trial(cfg, t);
  } else {
    std::vector<std::thread> pool;
    std::size_t chunk = (cfg.trials + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      std::size_t lo = w * chunk, hi = std::min(cfg.trials, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back([&cfg, &outcomes, lo, hi] {
        for (std::size_t t = lo; t < hi; ++t) outcomes[t] = run_trial(cfg, t);
      });
    }
    for (std::thread& th : pool) th.join();
  }

  // Order-independent reduction in trial order.
  for (TrialOutcome& out : outcomes) {
    res.rejected_trials += out.rejections;
    res.per_trial.push_back(out.record);
    for (std::string& f : out.flags) res.degeneracy_flags.push_back(std::move(f));
    if (out.record.failed) {
      ++res.failed_trials;
      continue;
    }
    ++res.counts[{out.record.n_pos_sv, out.record.n_neg_sv}];
    ++res.total_by_sv_count[out.record.n_pos_sv + out.record.n_neg_sv];
  }
  return res;
}

}  // namespace radonsvm
