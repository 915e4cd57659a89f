#pragma once

#include "qtails/identities.hpp"
#include "qtails/partitions.hpp"

#include <json.hpp>

#include <span>
#include <string>

namespace qtails {

// Verification reports. JSON mirrors the CheckReport fields; integer values
// are emitted as strings so nothing is squeezed through a double.
std::string report_to_text(const CheckReport& report);
nlohmann::json report_to_json(const CheckReport& report);
CheckReport report_from_json(const nlohmann::json& j);
std::string reports_to_csv(std::span<const CheckReport> reports);  // id,status,first_bad_n,lhs,rhs

// Sequence emission. Text lines are "n value" (b-file compatible); CSV is
// "n,value" with a header row.
std::string sequence_to_text(const StatTable& table, int n_max);
std::string sequence_to_csv(const StatTable& table, int n_max);
nlohmann::json sequence_to_json(const StatTable& table, int n_max);

}  // namespace qtails
