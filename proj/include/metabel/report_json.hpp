#pragma once

#include <string>

#include <json.hpp>

#include "metabel/analysis.hpp"

namespace metabel {

// {"<exponent>": [["p/q", ...], level], ...}
nlohmann::json poly_to_json(const LaurentPoly& f);
LaurentPoly poly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const AnalysisReport& r);
AnalysisReport report_from_json(const nlohmann::json& j);

// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string dump_report(const AnalysisReport& r);

std::string format_table(const AnalysisReport& r);
std::string format_homology(const BranchedCoverHomology& h);

}  // namespace metabel
