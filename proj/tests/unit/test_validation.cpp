#include <doctest.h>

#include <algorithm>
#include <json.hpp>

#include "ckosc/errors.hpp"
#include "ckosc/oracle/validation.hpp"

using namespace ckosc;
using namespace ckosc::oracle;

namespace {

Schedule small_schedule() {
  return schedule_from_json(R"([
    {"check": "wronskian", "points": [{"r": 0.3, "phi": 1.0, "t": 0.5}, {"r": 1.0, "t": 2.0}]},
    {"check": "normalization", "points": [{"n": 2, "r": 0.4, "t": 1.0}, {"n": 0}]},
    {"check": "schrodinger_residual", "points": [{"n": 1, "r": 0.2, "t": 0.3}]},
    {"check": "sigma0_forms", "points": [{"gamma": 0.5}, {"gamma": 1.9}]}
  ])");
}

}  // namespace

TEST_CASE("empty schedule gives an empty passing report") {
  const ValidationReport report = validate({}, {});
  CHECK(report.entries.empty());
  CHECK(report.passed());
  CHECK(report.summary().total == 0);
  CHECK(report.version == kReportVersion);
}

TEST_CASE("schedule parsing") {
  const Schedule s = small_schedule();
  REQUIRE(s.size() == 4);
  CHECK(s[0].points[0].r == 0.3);
  CHECK(s[0].points[1].gamma == 1.2);
  CHECK_THROWS_AS(schedule_from_json(R"([{"points": [{}]}])"), InvalidArgument);
  CHECK_THROWS_AS(schedule_from_json(R"([{"check": "wronskian", "points": [{"r": "big"}]}])"), InvalidArgument);
  CHECK_THROWS_AS(schedule_from_json("{"), InvalidArgument);
  for (const auto& check : registered_checks()) {
    CHECK_NOTHROW(schedule_from_json(R"([{"check": ")" + check + R"(", "points": []}])"));
  }
}

TEST_CASE("out-of-range points are skipped, not fatal") {
  const Schedule s = schedule_from_json(R"([{"check": "wronskian", "points": [{"gamma": 2.5}, {"r": 0.2}]}])");
  const ValidationReport report = validate({}, s);
  const ReportSummary summary = report.summary();
  CHECK(summary.skipped == 1);
  CHECK(summary.failed == 0);
  CHECK(report.passed());
  const auto skipped = std::find_if(report.entries.begin(), report.entries.end(),
                                    [](const ValidationEntry& e) { return e.status == EntryStatus::Skipped; });
  REQUIRE(skipped != report.entries.end());
  CHECK(skipped->note.find("not underdamped") != std::string::npos);
}

TEST_CASE("unknown checks are reported as skipped") {
  const auto report = validate({}, schedule_from_json(R"([{"check": "no_such_check", "points": [{}]}])"));
  REQUIRE(report.entries.size() == 1);
  CHECK(report.entries[0].status == EntryStatus::Skipped);
  CHECK(report.entries[0].note == "unknown check");
}

TEST_CASE("report order does not depend on the thread count") {
  ValidationConfig one;
  one.threads = 1;
  ValidationConfig many;
  many.threads = 6;
  const std::string a = to_json(validate({}, small_schedule(), one));
  const std::string b = to_json(validate({}, small_schedule(), many));
  CHECK(a == b);
  const ValidationReport report = validate({}, small_schedule(), many);
  for (std::size_t i = 1; i < report.entries.size(); ++i) {
    const auto& x = report.entries[i - 1];
    const auto& y = report.entries[i];
    CHECK((x.check_name < y.check_name || (x.check_name == y.check_name && x.point.key() <= y.point.key())));
  }
}

TEST_CASE("JSON report fields") {
  const ValidationReport report = validate({}, small_schedule());
  CHECK(report.passed());
  const auto json = nlohmann::json::parse(to_json(report));
  CHECK(json["version"] == "1");
  CHECK(json["params"]["gamma"] == 1.2);
  REQUIRE(json["entries"].size() == report.entries.size());
  for (const auto& entry : json["entries"]) {
    for (const char* key : {"check_name", "parameter_tuple", "measured", "expected", "tolerance", "pass", "status"}) {
      CHECK(entry.contains(key));
    }
    if (entry["status"] == "pass") CHECK(entry["pass"] == true);
  }
  CHECK(json["summary"]["total"] == report.summary().total);
  CHECK(json["summary"]["failed"] == 0);
  CHECK(to_table(report).find("wronskian") != std::string::npos);
}

TEST_CASE("tolerance overrides") {
  const Tolerances t = tolerances_from_json(R"({"wronskian": 1e-30, "residual": 0.5})");
  CHECK(t.wronskian == 1e-30);
  CHECK(t.residual == 0.5);
  CHECK(t.normalization == Tolerances{}.normalization);
  CHECK_THROWS_AS(tolerances_from_json(R"({"bogus": 1})"), InvalidArgument);
  CHECK_THROWS_AS(tolerances_from_json(R"({"wronskian": "tight"})"), InvalidArgument);

  // an impossible tolerance turns passes into failures
  ValidationConfig strict;
  strict.tolerances.normalization = 0.0;
  strict.tolerances.residual = 1e-15;
  const ReportSummary summary = validate({}, small_schedule(), strict).summary();
  CHECK(summary.failed >= 2);
}

TEST_CASE("the flipped width fails normalization and the residual") {
  ValidationConfig flipped;
  flipped.options.width_sign = WidthSign::Flipped;
  const ValidationReport report = validate({}, small_schedule(), flipped);
  CHECK(!report.passed());
  for (const auto& e : report.entries) {
    if (e.check_name.starts_with("normalization") || e.check_name.starts_with("schrodinger_residual")) {
      CHECK(e.status == EntryStatus::Fail);
    }
  }
}

TEST_CASE("default schedule covers every check and passes") {
  const Schedule schedule = default_schedule({});
  for (const auto& name : registered_checks()) {
    CHECK(std::any_of(schedule.begin(), schedule.end(), [&](const ScheduledCheck& c) { return c.check == name; }));
  }
  const ValidationReport report = validate({}, schedule);
  const ReportSummary summary = report.summary();
  CHECK(summary.failed == 0);
  CHECK(summary.passed > 100);
  CHECK(summary.recorded > 0);
}
