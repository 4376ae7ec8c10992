#pragma once

#include <json.hpp>

#include "radonsvm/experiments.hpp"
#include "radonsvm/radon_analysis.hpp"
#include "radonsvm/svm.hpp"

namespace radonsvm {

// JSON reports share schema version 1: fixed keys, finite numbers only.

nlohmann::json solution_to_json(const SvmSolution& s, const SupportSets& sets);
nlohmann::json certificate_to_json(const RadonCertificate& cert);
nlohmann::json configuration_to_json(const ConfigurationReport& rep);
nlohmann::json shatter_to_json(const ShatterReport& rep);
nlohmann::json census_to_json(const CensusResult& res);
nlohmann::json audit_to_json(const PrecisionAuditRecord& rec);

const char* precision_cause_name(PrecisionCause cause);

}  // namespace radonsvm
