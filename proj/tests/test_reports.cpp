#include <algorithm>

#include "doctest.h"
#include "lucaskit/errors.hpp"
#include "lucaskit/reports.hpp"

using namespace lucaskit;

namespace {

Json strip_timing(Json doc) {
  doc.erase("timing");
  return doc;
}

Report run(const Json& cfg) { return run_json(cfg.dump()); }

}  // namespace

TEST_CASE("k ranges and integers") {
  CHECK(parse_k_range("7") == std::make_pair(7, 7));
  CHECK(parse_k_range("2..20") == std::make_pair(2, 20));
  CHECK_THROWS_AS(parse_k_range("1"), Error);
  CHECK_THROWS_AS(parse_k_range("9..3"), Error);
  CHECK_THROWS_AS(parse_k_range("x"), Error);
  CHECK(parse_decimal_integer("1.5e46") == ExactInt("15000000000000000000000000000000000000000000000"));
  CHECK(parse_decimal_integer("100") == 100);
  CHECK_THROWS_AS(parse_decimal_integer("1.55e1"), Error);
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(RunConfig::from_json(Json{{"command", "zeros"}}), Error);
  CHECK_THROWS_AS(RunConfig::from_json(Json{{"command", "zeros"}, {"k", "5"}, {"M", "10"}}), Error);
  CHECK_THROWS_AS(RunConfig::from_json(Json{{"command", "nope"}}), Error);
  CHECK_THROWS_AS(RunConfig::from_json(Json{{"command", "zeros"}, {"k", "5"}, {"bogus", 1}}), Error);
  CHECK_THROWS_AS(RunConfig::from_json(Json{{"command", "zeros"}, {"k", "5"}, {"limit", 300000}}), Error);
  CHECK_NOTHROW(RunConfig::from_json(Json{{"command", "zeros"}, {"k", "5"}, {"limit", 300000}, {"long_run", true}}));
  RunConfig c = RunConfig::from_json(Json{{"command", "verify"}, {"subcommand", "signs"}, {"k", "4..8"}});
  CHECK(c.full_command() == "verify signs");
  CHECK(RunConfig::from_json(c.to_json()).to_json() == c.to_json());
}

TEST_CASE("zeros report") {
  Report r = run({{"command", "zeros"}, {"k", "5"}, {"limit", 100}, {"format", "json"}});
  CHECK(r.exit_code == 0);
  CHECK(r.doc["status"] == "pass");
  CHECK(r.doc["schema_version"] == kSchemaVersion);
  CHECK(r.doc["results"][0]["zeros"] == Json({1, 2, 3, 7, 8, 13}));
  CHECK(r.doc["results"][0]["l_indices"] == Json({-1, -2, -3, -7, -8, -13}));
  CHECK(r.doc["params"]["limit"] == 100);
}

TEST_CASE("table reproduction") {
  Report r = run({{"command", "report"}, {"subcommand", "table1"}});
  CHECK(r.exit_code == 0);
  const Json& rows = r.doc["results"];
  REQUIRE(rows.size() == 6);
  CHECK(rows[0]["indices"] == "--");
  CHECK(rows[0]["multiplicity"] == 0);
  CHECK(rows[4]["indices"] == "[-4, -1], [-10, -8], [-16, -15], -22");
  CHECK(rows[4]["multiplicity"] == 10);
  CHECK(rows[5]["multiplicity"] == 15);
  std::string text = render(r, "text");
  CHECK(text.find("6\t[-4, -1], [-10, -8], [-16, -15], -22\t10") != std::string::npos);
}

TEST_CASE("errors become reports") {
  Report bad = run_json("{not json");
  CHECK(bad.exit_code == 2);
  CHECK(bad.doc["status"] == "error");
  Report parity = run({{"command", "verify"}, {"subcommand", "signs"}, {"k", "5"}});
  CHECK(parity.exit_code == 2);
  CHECK(parity.doc["error"]["code"] == "parity");
  Report scan = run({{"command", "zeros"}, {"k", "10"}, {"limit", 50}});
  CHECK(scan.doc["error"]["code"] == "scan-limit");
}

TEST_CASE("JSON round trip is byte-identical") {
  Report r = run({{"command", "roots"}, {"k", "3..4"}});
  const std::string once = render(r, "json");
  const std::string twice = Json::parse(once).dump(2) + "\n";
  CHECK(once == twice);
}

TEST_CASE("worker count does not change content") {
  Json cfg = {{"command", "verify"}, {"subcommand", "identities"}, {"k", "2..9"}, {"n_max", 300}};
  Json one = cfg;
  one["workers"] = 1;
  Json four = cfg;
  four["workers"] = 4;
  Json a = strip_timing(run(one).doc);
  Json b = strip_timing(run(four).doc);
  a["params"].erase("workers");
  b["params"].erase("workers");
  CHECK(a == b);
  CHECK(strip_timing(run(one).doc) == strip_timing(run(one).doc));
}

TEST_CASE("tsv rendering") {
  Report r = run({{"command", "zeros"}, {"k", "3..4"}});
  std::string tsv = render(r, "tsv");
  CHECK(tsv.rfind("k\tscanned_range", 0) == 0);
  CHECK(std::count(tsv.begin(), tsv.end(), '\n') == 3);
}

TEST_CASE("closed-form verification carries errata") {
  Report r = run({{"command", "verify"}, {"subcommand", "closed-forms"}, {"k", "4..5"}, {"n_max", 300}});
  CHECK(r.exit_code == 0);
  bool strict = false;
  for (const Json& e : r.doc["errata"]) strict = strict || e["id"] == "zero_predicate";
  CHECK(strict);
}

TEST_CASE("selftest passes") {
  Report r = run({{"command", "selftest"}});
  CHECK(r.exit_code == 0);
}
