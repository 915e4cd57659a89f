#include "qtails/report_io.hpp"

#include <sstream>

namespace qtails {

using nlohmann::json;

std::string report_to_text(const CheckReport& report) {
  std::ostringstream os;
  os << (report.pass ? "PASS" : "FAIL") << "  " << report.id << "  (order " << report.order << ", "
     << report.elapsed_ms << " ms)";
  if (!report.pass) {
    os << "\n  first mismatch at n=" << *report.first_bad_n;
    if (!report.component.empty()) os << "  [" << report.component << "]";
    for (const auto& [name, value] : report.values) os << "\n    " << name << " = " << value.str();
  }
  for (const auto& [key, value] : report.notes) os << "\n  " << key << " = " << value;
  return os.str();
}

json report_to_json(const CheckReport& report) {
  json j;
  j["id"] = report.id;
  j["order"] = report.order;
  j["status"] = report.pass ? "pass" : "fail";
  if (report.first_bad_n)
    j["first_bad_n"] = *report.first_bad_n;
  else
    j["first_bad_n"] = nullptr;
  j["component"] = report.component;
  j["values"] = json::array();
  for (const auto& [name, value] : report.values)
    j["values"].push_back(json{{"producer", name}, {"value", value.str()}});
  j["notes"] = json::object();
  for (const auto& [key, value] : report.notes) j["notes"][key] = value;
  j["elapsed_ms"] = report.elapsed_ms;
  return j;
}

CheckReport report_from_json(const json& j) {
  CheckReport report;
  report.id = j.at("id").get<std::string>();
  report.order = j.at("order").get<int>();
  report.pass = j.at("status").get<std::string>() == "pass";
  if (!j.at("first_bad_n").is_null()) report.first_bad_n = j.at("first_bad_n").get<int>();
  report.component = j.at("component").get<std::string>();
  for (const auto& item : j.at("values"))
    report.values.emplace_back(item.at("producer").get<std::string>(),
                               Int::from_string(item.at("value").get<std::string>()));
  for (const auto& [key, value] : j.at("notes").items())
    report.notes.emplace_back(key, value.get<std::string>());
  report.elapsed_ms = j.at("elapsed_ms").get<double>();
  return report;
}

std::string reports_to_csv(std::span<const CheckReport> reports) {
  std::ostringstream os;
  os << "id,status,first_bad_n,lhs,rhs\n";
  for (const auto& report : reports) {
    os << report.id << ',' << (report.pass ? "pass" : "fail") << ',';
    if (report.first_bad_n) os << *report.first_bad_n;
    os << ',';
    if (report.values.size() >= 2) {
      os << report.values[0].second.str() << ',' << report.values[1].second.str();
    } else {
      os << ',';
    }
    os << '\n';
  }
  return os.str();
}

std::string sequence_to_text(const StatTable& table, int n_max) {
  std::ostringstream os;
  for (int n = table.first_index; n <= n_max; ++n)
    os << n << ' ' << table.values[static_cast<size_t>(n)].str() << '\n';
  return os.str();
}

std::string sequence_to_csv(const StatTable& table, int n_max) {
  std::ostringstream os;
  os << "n,value\n";
  for (int n = table.first_index; n <= n_max; ++n)
    os << n << ',' << table.values[static_cast<size_t>(n)].str() << '\n';
  return os.str();
}

json sequence_to_json(const StatTable& table, int n_max) {
  json rows = json::array();
  for (int n = table.first_index; n <= n_max; ++n)
    rows.push_back(json{{"n", n}, {"value", table.values[static_cast<size_t>(n)].str()}});
  return json{{"name", table.name}, {"values", rows}};
}

}  // namespace qtails
