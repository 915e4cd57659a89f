#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

// End-to-end tests against the installed binary; the path arrives via the
// QTAILS_BIN environment variable set by the test harness.

namespace {

struct CmdResult {
  int exit_code = -1;
  std::string out;
};

std::string binary_path() {
  const char* path = std::getenv("QTAILS_BIN");
  REQUIRE_MESSAGE(path != nullptr, "QTAILS_BIN must point at the CLI binary");
  return path;
}

CmdResult run_raw(const std::string& command) {
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  REQUIRE(pipe != nullptr);
  CmdResult result;
  std::array<char, 4096> buffer{};
  size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.out.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

CmdResult run(const std::string& args) { return run_raw(binary_path() + " " + args); }

CmdResult run_with_env(const std::string& env, const std::string& args) {
  return run_raw("env " + env + " " + binary_path() + " " + args);
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = "/tmp/qtails_test_" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("seq emits the documented tables") {
  auto s = run("seq S 4");
  CHECK(s.exit_code == 0);
  CHECK(s.out == "0 0\n1 0\n2 0\n3 1\n4 4\n");

  auto spt = run("seq spt 4");
  CHECK(spt.exit_code == 0);
  CHECK(spt.out == "1 1\n2 3\n3 5\n4 10\n");

  auto d = run("seq d 6");
  CHECK(d.exit_code == 0);
  CHECK(d.out == "1 1\n2 2\n3 2\n4 3\n5 2\n6 4\n");
}

TEST_CASE("seq formats") {
  auto csv = run("seq p 3 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out == "n,value\n0,1\n1,1\n2,2\n3,3\n");

  auto json_run = run("seq p 3 --format json");
  CHECK(json_run.exit_code == 0);
  const auto parsed = nlohmann::json::parse(json_run.out);
  CHECK(parsed.at("name") == "p");
  CHECK(parsed.at("values").size() == 4);
  CHECK(parsed.at("values")[3].at("value") == "3");

  auto coeff = run("seq coeff:thm1.1:2 5");
  CHECK(coeff.exit_code == 0);
  CHECK(coeff.out == "0 0\n1 0\n2 0\n3 1\n4 4\n5 12\n");
}

TEST_CASE("seq usage errors") {
  CHECK(run("seq nosuch 5").exit_code == 2);
  CHECK(run("seq coeff:nosuch:0 5").exit_code == 2);
  CHECK(run("seq coeff:thm1.1:9 5").exit_code == 2);
  CHECK(run("seq p 5001").exit_code == 2);
  CHECK(run("seq p").exit_code == 2);
  CHECK(run("seq p 5 --format yaml").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
}

TEST_CASE("seq aborts on 128-bit overflow with exit 3") {
  // p(n) passes 2^127 below n = 1500, well inside the accepted index range
  auto result = run("seq p 1500");
  CHECK(result.exit_code == 3);
  CHECK(result.out.find("arithmetic safety abort") != std::string::npos);
}

TEST_CASE("verify pass, fail reporting, and option handling") {
  auto all10 = run("verify all --order 10");
  CHECK(all10.exit_code == 0);
  size_t passes = 0;
  size_t pos = 0;
  while ((pos = all10.out.find("PASS", pos)) != std::string::npos) {
    ++passes;
    pos += 4;
  }
  CHECK(passes == 15);

  auto all100 = run("verify all --order 100");
  CHECK(all100.exit_code == 0);
  CHECK(all100.out.find("all checks passed (15 run, order 100)") != std::string::npos);

  auto single = run("verify thm1.2 --order 60");
  CHECK(single.exit_code == 0);
  CHECK(single.out.find("min_slack") != std::string::npos);

  CHECK(run("verify nosuch").exit_code == 2);
  CHECK(run("verify thm1.1 --order 1").exit_code == 2);
  CHECK(run("verify thm1.1 --order 9999").exit_code == 2);
}

TEST_CASE("verify json output parses and mirrors the report") {
  auto result = run("verify all --order 10 --format json");
  CHECK(result.exit_code == 0);
  const auto parsed = nlohmann::json::parse(result.out);
  REQUIRE(parsed.size() == 15);
  for (const auto& report : parsed) {
    CHECK(report.at("status") == "pass");
    CHECK(report.at("first_bad_n").is_null());
    CHECK(report.at("order") == 10);
  }
  // deterministic id order
  CHECK(parsed[0].at("id") == "bailey2.1");
  CHECK(parsed[14].at("id") == "thm1.3");

  auto csv = run("verify eq1.1 --order 10 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out.find("id,status,first_bad_n,lhs,rhs\neq1.1,pass") == 0);
}

TEST_CASE("QTAILS_ORDER environment override") {
  auto ok = run_with_env("QTAILS_ORDER=12", "verify kim1.3");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("order 12") != std::string::npos);

  auto bad = run_with_env("QTAILS_ORDER=banana", "verify kim1.3");
  CHECK(bad.exit_code == 2);

  // explicit flag wins over the environment
  auto flag = run_with_env("QTAILS_ORDER=12", "verify kim1.3 --order 20");
  CHECK(flag.exit_code == 0);
  CHECK(flag.out.find("order 20") != std::string::npos);
}

TEST_CASE("bcheck compares against b-files") {
  const auto good = write_temp("good.b", "# partitions\n1 1\n2 2\n3 3\n4 5\n");
  auto ok = run("bcheck p " + good);
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("OK: 4 values") != std::string::npos);

  const auto spt_file = write_temp("spt.b", "1 1\n2 3\n");
  CHECK(run("bcheck spt " + spt_file).exit_code == 0);

  const auto mismatch = write_temp("bad_value.b", "1 1\n2 2\n3 4\n");
  auto bad = run("bcheck p " + mismatch);
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("MISMATCH at n=3") != std::string::npos);

  const auto malformed = write_temp("malformed.b", "abc\n");
  auto parse_fail = run("bcheck p " + malformed);
  CHECK(parse_fail.exit_code == 2);
  CHECK(parse_fail.out.find("line 1") != std::string::npos);

  const auto non_monotone = write_temp("nonmono.b", "2 2\n1 1\n");
  CHECK(run("bcheck p " + non_monotone).exit_code == 2);

  CHECK(run("bcheck nosuch " + good).exit_code == 2);
  CHECK(run("bcheck p /tmp/qtails_no_such_file.b").exit_code == 2);
}

TEST_CASE("seq text output round-trips through bcheck") {
  auto emitted = run("seq M2 12");
  CHECK(emitted.exit_code == 0);
  const auto path = write_temp("roundtrip.b", emitted.out);
  CHECK(run("bcheck M2 " + path).exit_code == 0);
}
