#pragma once

// Serialization: triangles as ragged CSV and JSON, series as JSON,
// verification reports as JSON. All integers are decimal strings.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pathpairs/nat.hpp"
#include "pathpairs/report.hpp"
#include "pathpairs/series.hpp"

namespace pathpairs {

/// One line per row, entries separated by commas, each line '\n'-terminated.
std::string triangle_to_csv(const Triangle& tri);

/// Parses ragged CSV back into rows. Row i must have exactly i + 1 fields.
/// Throws DomainError on malformed input.
std::vector<std::vector<Nat>> triangle_rows_from_csv(std::string_view text);

/// {"k", "epsilon", "method", "rows": [["1"], ["2", "1"], ...]}
nlohmann::json triangle_to_json(const Triangle& tri);

/// {"order": N, "coeffs": ["c0", ..., "cN"]}
nlohmann::json series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const VerificationReport& report);

}  // namespace pathpairs
