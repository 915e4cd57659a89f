#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtails/identities.hpp"
#include "qtails/report_io.hpp"

#include <algorithm>
#include <set>

using namespace qtails;

namespace {

const std::set<std::string> kExpectedIds = {
    "eq1.1",  "thm1.1",    "thm1.2",   "thm1.3",   "eq2.5",
    "eq2.5-tails", "bailey2.1", "fine2.6",  "euler-aux", "onedim",
    "kim1.3", "eq1.4",     "euler-np", "spt",      "mod2"};

}  // namespace

TEST_CASE("catalog structure") {
  const auto& cat = catalog();
  CHECK(cat.size() == 15);
  std::set<std::string> ids;
  for (const auto& entry : cat) ids.insert(entry.id);
  CHECK(ids == kExpectedIds);

  EvalContext ctx(10);
  for (const auto& entry : cat) {
    const auto comps = entry.components(ctx);
    CHECK(!comps.empty());
    for (const auto& comp : comps) CHECK(comp.producers.size() >= 2);
  }

  const auto shape = entry_shape("thm1.1", 10);
  REQUIRE(shape.size() == 1);
  CHECK(shape[0].second == 3);

  CHECK(entry_shape("bailey2.1", 10).size() == 81);
  // 18 series specializations plus value/derivative pairs for 6 dual checks
  CHECK(entry_shape("fine2.6", 10).size() == 30);
  CHECK(entry_shape("euler-aux", 10).size() == 11);

  CHECK(find_check("thm1.2") != nullptr);
  CHECK(find_check("nosuch") == nullptr);
}

TEST_CASE("thm1.1 producers agree and give the documented S values") {
  const auto report = run_check("thm1.1", 40);
  CHECK(report.pass);
  CHECK(!report.first_bad_n.has_value());

  const auto streams = entry_streams("thm1.1", 40);
  REQUIRE(streams.size() == 3);
  for (const auto& [name, values] : streams) {
    CAPTURE(name);
    CHECK(values[0] == Int(0));
    CHECK(values[1] == Int(0));
    CHECK(values[2] == Int(0));
    CHECK(values[3] == Int(1));
    CHECK(values[4] == Int(4));
  }
}

TEST_CASE("run_check rejects bad input") {
  CHECK_THROWS_AS(run_check("nosuch", 10), std::invalid_argument);
  CHECK_THROWS_AS(run_check("kim1.3", 1), std::invalid_argument);
  CHECK_NOTHROW(run_check("kim1.3", 2));
  CHECK_THROWS_AS(run_all(1), std::invalid_argument);
}

TEST_CASE("mutation at q^7 is caught with first_bad_n = 7") {
  const Mutation mutation{0, 0, 7, Int(1)};
  const auto report = run_check("eq1.1", 20, mutation);
  CHECK(!report.pass);
  REQUIRE(report.first_bad_n.has_value());
  CHECK(*report.first_bad_n == 7);
  CHECK(report.values.size() == 3);

  // same stream without mutation is clean
  CHECK(run_check("eq1.1", 20).pass);

  CHECK_THROWS_AS(run_check("eq1.1", 20, Mutation{5, 0, 7, Int(1)}), std::invalid_argument);
  CHECK_THROWS_AS(run_check("eq1.1", 20, Mutation{0, 0, 21, Int(1)}), std::invalid_argument);
}

TEST_CASE("run_all passes at small orders and reports sorted") {
  for (const int order : {2, 10, 40}) {
    CAPTURE(order);
    const auto reports = run_all(order);
    CHECK(reports.size() == 15);
    for (const auto& report : reports) {
      CAPTURE(report.id);
      CHECK(report.pass);
    }
    CHECK(std::is_sorted(reports.begin(), reports.end(),
                         [](const CheckReport& a, const CheckReport& b) { return a.id < b.id; }));
  }
}

TEST_CASE("doubling the order never changes an already-checked window") {
  const std::vector<std::string> single_component = {
      "eq1.1", "thm1.1", "thm1.2", "thm1.3",  "eq2.5", "eq2.5-tails",
      "onedim", "kim1.3", "eq1.4",  "euler-np", "spt",  "mod2"};
  for (const auto& id : single_component) {
    CAPTURE(id);
    const auto narrow = entry_streams(id, 30);
    const auto wide = entry_streams(id, 60);
    REQUIRE(narrow.size() == wide.size());
    for (size_t i = 0; i < narrow.size(); ++i) {
      CHECK(narrow[i].first == wide[i].first);
      for (int n = 0; n <= 30; ++n)
        CHECK(narrow[i].second[static_cast<size_t>(n)] == wide[i].second[static_cast<size_t>(n)]);
    }
  }
}

TEST_CASE("strictness: M2 - N2 = 2 spt > 0") {
  EvalContext ctx(60);
  for (int n = 1; n <= 60; ++n) {
    const Int diff = ctx.m2()[static_cast<size_t>(n)] - ctx.n2()[static_cast<size_t>(n)];
    CHECK(diff == Int(2) * ctx.spt()[static_cast<size_t>(n)]);
    CHECK(diff > Int(0));
  }
}

TEST_CASE("thm1.2 notes carry the slack metric") {
  const auto report = run_check("thm1.2", 30);
  CHECK(report.pass);
  REQUIRE(report.notes.size() == 2);
  CHECK(report.notes[0].first == "min_slack");
  CHECK(report.notes[1].first == "argmin_n");
}

TEST_CASE("report serialization round-trips") {
  auto report = run_check("thm1.2", 25);
  report.elapsed_ms = 1.25;  // pin for a byte-stable round trip
  const auto j = report_to_json(report);
  const auto parsed = report_from_json(j);
  CHECK(report_to_json(parsed) == j);
  CHECK(parsed.id == report.id);
  CHECK(parsed.pass == report.pass);
  // notes come back in object-key order
  auto sorted_notes = [](std::vector<std::pair<std::string, std::string>> notes) {
    std::sort(notes.begin(), notes.end());
    return notes;
  };
  CHECK(sorted_notes(parsed.notes) == sorted_notes(report.notes));

  auto failing = run_check("eq1.1", 15, Mutation{0, 1, 9, Int(-2)});
  failing.elapsed_ms = 0.5;
  const auto jf = report_to_json(failing);
  const auto parsed_fail = report_from_json(jf);
  CHECK(report_to_json(parsed_fail) == jf);
  REQUIRE(parsed_fail.first_bad_n.has_value());
  CHECK(*parsed_fail.first_bad_n == 9);
  CHECK(parsed_fail.values.size() == 3);

  const std::vector<CheckReport> reports = {report, failing};
  const auto csv = reports_to_csv(reports);
  CHECK(csv.find("id,status,first_bad_n,lhs,rhs\n") == 0);
  CHECK(csv.find("thm1.2,pass") != std::string::npos);
  CHECK(csv.find("eq1.1,fail,9") != std::string::npos);
}

TEST_CASE("coefficient streams are exposed per producer") {
  const auto streams = entry_streams("eq2.5", 25);
  REQUIRE(streams.size() == 2);
  CHECK(streams[0].first == "bailey_double_sum");
  CHECK(streams[0].second == streams[1].second);
  // desk expansion: q^3 + 3 q^4 + 7 q^5 + ...
  CHECK(streams[0].second[3] == Int(1));
  CHECK(streams[0].second[4] == Int(3));
  CHECK(streams[0].second[5] == Int(7));

  CHECK_THROWS_AS(entry_streams("nosuch", 10), std::invalid_argument);
}

TEST_CASE("thm1.3 spot values") {
  const auto streams = entry_streams("thm1.3", 12);
  REQUIRE(streams.size() == 3);
  for (const auto& [name, values] : streams) {
    CAPTURE(name);
    CHECK(values[3] == Int(1));
    CHECK(values[4] == Int(3));
  }
}
