#include "commvar/checks.hpp"
#include "commvar/report.hpp"

#include <doctest.h>

using namespace commvar;
using nlohmann::json;

TEST_CASE("claim status follows exact equality") {
  Report r("demo check", 5);
  r.check("same", "statement", 3, 3);
  r.check("different", "statement", 3, 4);
  r.check("type matters", "statement", 3, "3");
  r.inconclusive("open", "statement", "definite", "inconclusive");
  CHECK(r.failed_count() == 2);
  CHECK(r.inconclusive_count() == 1);
  CHECK(r.claims()[0].status == Status::Pass);
  CHECK(r.claims()[1].status == Status::Fail);
  CHECK(r.claims()[3].status == Status::Inconclusive);
}

TEST_CASE("json schema") {
  Report r("demo check", 9);
  r.params()["n"] = 2;
  r.check("value", "statement", json{1, 2}, json{1, 2});
  const json j = r.to_json();
  CHECK(j.at("schema") == "commvar-report/1");
  CHECK(j.at("command") == "demo check");
  CHECK(j.at("seed") == 9);
  CHECK(j.at("params") == json{{"n", 2}});
  CHECK(j.at("elapsed_ms").is_null());
  const auto& c = j.at("claims").at(0);
  CHECK(c.at("name") == "value");
  CHECK(c.at("paper_source") == "statement");
  CHECK(c.at("status") == "pass");
  CHECK(json::parse(r.json_text()) == j);
  r.set_elapsed_ms(12);
  CHECK(r.to_json().at("elapsed_ms") == 12);
  CHECK(r.text().find("value") != std::string::npos);
}

TEST_CASE("parameter recording") {
  Params p;
  p.set_int("n", 3);
  p.set_string("pair", "x");
  CHECK(p.get_int("n", 1) == 3);
  CHECK(p.get_int("m", 4) == 4);
  CHECK_FALSE(p.find_int("q"));
  CHECK(p.require_string("pair") == "x");
  CHECK_THROWS_AS(p.require_int("q"), UsageError);
  CHECK(p.used() == json{{"n", 3}, {"m", 4}, {"pair", "x"}});
}

TEST_CASE("every registered check runs with defaults or reports a usage error") {
  for (const auto& info : available_checks()) {
    CAPTURE(info.module);
    CAPTURE(info.check);
    Params p;
    p.set_int("samples", 3);
    try {
      const Report r = run_check(info.module, info.check, p);
      CHECK(r.failed_count() == 0);
      for (const auto& c : r.claims()) CHECK_FALSE(c.source.empty());
    } catch (const UsageError&) {
      // Checks with required parameters (--pair, --jt).
      CHECK((info.check == "catalog" || info.check == "rank" || info.check == "subdiagrams" || info.check == "type"));
    }
  }
  CHECK_THROWS_AS(run_check("nope", "nothing", Params{}), UsageError);
}

TEST_CASE("reports are deterministic for a fixed seed") {
  Params p;
  p.set_seed(77);
  p.set_int("samples", 10);
  const auto a = run_check("strata", "rank-sum", p).json_text();
  const auto b = run_check("strata", "rank-sum", p).json_text();
  CHECK(a == b);
}

TEST_CASE("bad parameters are usage errors") {
  Params p;
  p.set_int("n", 3);
  p.set_int("m", 2);
  CHECK_THROWS_AS(run_check("strata", "lower-bound", p), UsageError);
  Params q;
  q.set_int("n", 1);
  q.set_int("m", 1);
  q.set_string("jt", "2a");
  CHECK_THROWS_AS(run_check("nilpotent", "type", q), UsageError);
  Params r;
  r.set_string("pair", "not a pair");
  CHECK_THROWS_AS(run_check("satake", "catalog", r), UsageError);
}
