#pragma once

#include <string>

#include <json.hpp>

#include "isotool/audit.hpp"
#include "isotool/cleanse.hpp"
#include "isotool/eval.hpp"
#include "isotool/tu_format.hpp"

namespace iso {

// Report objects use ordered JSON so identical runs serialize byte-for-byte
// identically. Percentages appear rounded to two decimals next to their
// exact numerator/denominator pair.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);  // [num, den]

Json audit_report_json(const std::string& dataset, IsoMode mode,
                       const AuditReport& report);

std::string histogram_csv(IsoMode mode, const OrbitHistogram& histogram);

Json clean_report_json(const std::string& dataset, const CleanReport& report,
                       const DatasetStats& cleaned_stats);

Json stats_json(const std::string& dataset, const DatasetStats& stats);

Json evaluation_json(const EvaluationResult& result);

}  // namespace iso
