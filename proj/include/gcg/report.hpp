#pragma once

#include <json.hpp>
#include <string>

#include "gcg/theorems.hpp"

namespace gcg {

/// Bumped whenever a field is renamed or removed.
inline constexpr int kReportSchemaVersion = 1;

nlohmann::json to_json(const PairWitness& w);
nlohmann::json to_json(const VerificationOutcome& o);
nlohmann::json to_json(const GraphSummary& s);
nlohmann::json to_json(const PairReport& r);
nlohmann::json to_json(const CorpusReport& r);

/// Pretty-printed json with a trailing newline; byte-identical for identical reports.
std::string report_json(const CorpusReport& r);
/// One line per non-vacuous outcome plus totals.
std::string report_text(const CorpusReport& r);

}  // namespace gcg
