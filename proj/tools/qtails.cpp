// qtails: exact q-series workbench for partition statistics. Computes the
// catalogued sequences, runs the identity verification suite, and diffs
// sequences against external b-files.

#include "qtails/bfile.hpp"
#include "qtails/identities.hpp"
#include "qtails/partitions.hpp"
#include "qtails/report_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitArithmeticSafety = 3;

constexpr int kMaxSequenceIndex = 2000;  // large p-family values overflow before this
constexpr int kMaxVerifyOrder = 200;

struct CoeffRequest {
  std::string id;
  int producer = 0;
};

// name has the form coeff:<identity-id>:<producer-index>
std::optional<CoeffRequest> parse_coeff_name(const std::string& name) {
  if (name.rfind("coeff:", 0) != 0) return std::nullopt;
  const auto rest = name.substr(6);
  const auto colon = rest.rfind(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 >= rest.size()) return std::nullopt;
  CoeffRequest request;
  request.id = rest.substr(0, colon);
  try {
    size_t used = 0;
    request.producer = std::stoi(rest.substr(colon + 1), &used);
    if (used != rest.size() - colon - 1 || request.producer < 0) return std::nullopt;
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return request;
}

int default_order() {
  if (const char* env = std::getenv("QTAILS_ORDER")) {
    try {
      size_t used = 0;
      const int value = std::stoi(env, &used);
      if (used != std::string(env).size() || value < 2 || value > kMaxVerifyOrder)
        throw std::invalid_argument("");
      return value;
    } catch (const std::exception&) {
      throw std::invalid_argument("QTAILS_ORDER must be an integer in [2, " +
                                  std::to_string(kMaxVerifyOrder) + "]");
    }
  }
  return 100;
}

qtails::StatTable resolve_sequence(const std::string& name, int n_max) {
  if (const auto coeff = parse_coeff_name(name)) {
    const auto streams = qtails::entry_streams(coeff->id, n_max);
    if (coeff->producer >= static_cast<int>(streams.size()))
      throw std::invalid_argument("producer index " + std::to_string(coeff->producer) +
                                  " out of range for " + coeff->id + " (has " +
                                  std::to_string(streams.size()) + ")");
    qtails::StatTable table;
    table.name = name;
    table.values = streams[static_cast<size_t>(coeff->producer)].second;
    return table;
  }
  return qtails::build_stat_table(name, n_max);
}

void validate_sequence_name(const std::string& name) {
  if (qtails::is_stat_table_name(name)) return;
  if (const auto coeff = parse_coeff_name(name)) {
    if (qtails::find_check(coeff->id) != nullptr) return;
    throw std::invalid_argument("unknown identity id in " + name);
  }
  throw std::invalid_argument("unknown sequence name: " + name);
}

int cmd_seq(const std::string& name, int n_max, const std::string& format) {
  validate_sequence_name(name);
  if (n_max < 0 || n_max > kMaxSequenceIndex)
    throw std::invalid_argument("n_max must be in [0, " + std::to_string(kMaxSequenceIndex) + "]");
  const auto table = resolve_sequence(name, n_max);
  if (format == "json")
    std::cout << qtails::sequence_to_json(table, n_max).dump(2) << '\n';
  else if (format == "csv")
    std::cout << qtails::sequence_to_csv(table, n_max);
  else
    std::cout << qtails::sequence_to_text(table, n_max);
  return kExitPass;
}

int cmd_verify(const std::string& id, int order, const std::string& format) {
  if (order < 2 || order > kMaxVerifyOrder)
    throw std::invalid_argument("order must be in [2, " + std::to_string(kMaxVerifyOrder) + "]");
  std::vector<qtails::CheckReport> reports;
  if (id == "all") {
    reports = qtails::run_all(order);
  } else {
    if (qtails::find_check(id) == nullptr)
      throw std::invalid_argument("unknown identity id: " + id);
    reports.push_back(qtails::run_check(id, order));
  }
  bool all_pass = true;
  for (const auto& report : reports) all_pass = all_pass && report.pass;

  if (format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& report : reports) j.push_back(qtails::report_to_json(report));
    std::cout << j.dump(2) << '\n';
  } else if (format == "csv") {
    std::cout << qtails::reports_to_csv(reports);
  } else {
    for (const auto& report : reports) std::cout << qtails::report_to_text(report) << '\n';
    std::cout << (all_pass ? "all checks passed" : "CHECKS FAILED") << " (" << reports.size()
              << " run, order " << order << ")\n";
  }
  return all_pass ? kExitPass : kExitVerificationFailure;
}

int cmd_bcheck(const std::string& name, const std::string& path) {
  if (!qtails::is_stat_table_name(name))
    throw std::invalid_argument("unknown sequence name: " + name);
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  const auto entries = qtails::parse_bfile(in);
  if (entries.empty()) {
    std::cout << "no entries to compare\n";
    return kExitPass;
  }
  const long long max_n = entries.back().n;
  if (max_n > kMaxSequenceIndex)
    throw std::invalid_argument("file index " + std::to_string(max_n) + " beyond supported range " +
                                std::to_string(kMaxSequenceIndex));
  const auto table = qtails::build_stat_table(name, static_cast<int>(max_n));
  const auto diff = qtails::compare_bfile(entries, table.values);
  if (diff.match) {
    std::cout << "OK: " << diff.compared << " values of " << name << " match\n";
    return kExitPass;
  }
  std::cout << "MISMATCH at n=" << diff.first_bad_n << ": file has " << diff.file_value.str()
            << ", computed " << diff.computed_value.str() << '\n';
  return kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact q-series workbench for partition statistics"};
  app.require_subcommand(1);

  std::string seq_name, seq_format = "text";
  int seq_n_max = 0;
  auto* seq = app.add_subcommand("seq", "emit a statistic table as n/value pairs");
  seq->add_option("name", seq_name,
                  "sequence name (p, d, sigma1, p2, N2, M2, spt, S, b2) or coeff:<id>:<k>")
      ->required();
  seq->add_option("n_max", seq_n_max, "largest index to emit")->required();
  seq->add_option("--format", seq_format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  std::string verify_id, verify_format = "text";
  int verify_order = 0;
  auto* verify = app.add_subcommand("verify", "run identity checks to a truncation order");
  verify->add_option("id", verify_id, "identity id or 'all'")->required();
  auto* order_opt = verify->add_option("--order", verify_order, "truncation order Q");
  verify->add_option("--format", verify_format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  std::string bcheck_name, bcheck_path;
  auto* bcheck = app.add_subcommand("bcheck", "compare a sequence against a b-file");
  bcheck->add_option("name", bcheck_name, "sequence name")->required();
  bcheck->add_option("path", bcheck_path, "b-file path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (seq->parsed()) return cmd_seq(seq_name, seq_n_max, seq_format);
    if (verify->parsed()) {
      const int order = order_opt->count() > 0 ? verify_order : default_order();
      return cmd_verify(verify_id, order, verify_format);
    }
    if (bcheck->parsed()) return cmd_bcheck(bcheck_name, bcheck_path);
  } catch (const qtails::safety_error& e) {
    std::cerr << "arithmetic safety abort: " << e.what() << '\n';
    return kExitArithmeticSafety;
  } catch (const qtails::bfile_parse_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
