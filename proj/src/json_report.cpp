#include "radonsvm/json_report.hpp"

namespace radonsvm {

using nlohmann::json;

namespace {
constexpr int kSchemaVersion = 1;
}

const char* precision_cause_name(PrecisionCause cause) {
  switch (cause) {
    case PrecisionCause::none: return "none";
    case PrecisionCause::parallel_flats: return "parallel_flats";
    case PrecisionCause::rank_deficient_duals: return "rank_deficient_duals";
    case PrecisionCause::insufficient_precision: return "insufficient_precision";
  }
  return "unknown";
}

json solution_to_json(const SvmSolution& s, const SupportSets& sets) {
  return json{{"schema", kSchemaVersion},
              {"kind", "svm_solution"},
              {"w", s.w},
              {"b", s.b},
              {"margin", s.margin},
              {"alphas", s.alphas},
              {"support_indices", sets.margin_set},
              {"dual_support_indices", sets.dual_set},
              {"degenerate_support_set", sets.degenerate},
              {"solver", json{{"iterations", s.iterations}, {"achieved_gap", s.achieved_gap}}}};
}

json certificate_to_json(const RadonCertificate& cert) {
  return json{{"schema", kSchemaVersion},
              {"kind", "radon_certificate"},
              {"coefficients", cert.coefficients},
              {"part_one", cert.part_one},
              {"part_two", cert.part_two},
              {"radon_point", cert.radon_point},
              {"scale", cert.scale},
              {"degenerate_null_space", cert.degenerate_null_space}};
}

json configuration_to_json(const ConfigurationReport& rep) {
  return json{{"schema", kSchemaVersion},
              {"kind", "configuration_report"},
              {"n_pos_sv", rep.n_pos_sv},
              {"n_neg_sv", rep.n_neg_sv},
              {"radon_point", rep.radon_point},
              {"hulls_intersect", rep.hulls_intersect},
              {"unique_point", rep.unique_point},
              {"strong_gp_condition_i", rep.strong_gp_condition_i},
              {"strong_gp_condition_ii", rep.strong_gp_condition_ii},
              {"exceeds_bound", rep.exceeds_bound},
              {"degeneracy_flags", rep.degeneracy_flags}};
}

json shatter_to_json(const ShatterReport& rep) {
  return json{{"schema", kSchemaVersion},
              {"kind", "shatter_report"},
              {"shatterable", rep.shatterable},
              {"witness_labels", rep.witness_labels}};
}

json census_to_json(const CensusResult& res) {
  json counts = json::array();
  for (const auto& [key, value] : res.counts)
    counts.push_back(json{{"n_pos_sv", key.first}, {"n_neg_sv", key.second}, {"trials", value}});
  json totals = json::object();
  for (const auto& [count, value] : res.total_by_sv_count)
    totals[std::to_string(count)] = value;
  const ExperimentConfig& cfg = res.config;
  return json{{"schema", kSchemaVersion},
              {"kind", "census_result"},
              {"config", json{{"a", cfg.a},
                              {"points_per_class", cfg.points_per_class},
                              {"dim", cfg.dim},
                              {"std_dev", cfg.std_dev},
                              {"trials", cfg.trials},
                              {"seed", cfg.seed},
                              {"max_rejections_per_trial", cfg.max_rejections_per_trial}}},
              {"counts", counts},
              {"total_by_sv_count", totals},
              {"two_sv_fraction", res.fraction_with_sv_count(2)},
              {"rejected_trials", res.rejected_trials},
              {"failed_trials", res.failed_trials},
              {"degeneracy_flags", res.degeneracy_flags}};
}

json audit_to_json(const PrecisionAuditRecord& rec) {
  return json{{"schema", kSchemaVersion},
              {"kind", "precision_audit"},
              {"support_count", rec.support_count},
              {"bound", rec.bound},
              {"effective_tau", rec.effective_tau},
              {"cause", precision_cause_name(rec.cause)},
              {"recommended_tol", rec.recommended_tol},
              {"detail", rec.detail}};
}

}  // namespace radonsvm
