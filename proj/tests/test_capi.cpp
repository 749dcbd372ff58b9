#include "commvar/commvar.h"

#include <doctest.h>
#include <json.hpp>

#include <string>

TEST_CASE("version and registry") {
  CHECK(std::string(commvar_version()).size() > 0);
  REQUIRE(commvar_check_count() > 0);
  const char *module = nullptr, *check = nullptr, *summary = nullptr;
  CHECK(commvar_check_name(0, &module, &check, &summary) == COMMVAR_OK);
  CHECK(module != nullptr);
  CHECK(commvar_check_name(commvar_check_count(), &module, &check, &summary) == COMMVAR_USAGE);
}

TEST_CASE("run a check through the C interface") {
  commvar_context* ctx = commvar_context_create();
  REQUIRE(ctx);
  CHECK(commvar_context_set_int(ctx, "n", 1) == COMMVAR_OK);
  CHECK(commvar_context_set_int(ctx, "m", 5) == COMMVAR_OK);
  CHECK(commvar_context_set_seed(ctx, 3) == COMMVAR_OK);
  commvar_report* rep = nullptr;
  REQUIRE(commvar_run(ctx, "strata", "lower-bound", &rep) == COMMVAR_OK);
  REQUIRE(rep);
  const auto j = nlohmann::json::parse(commvar_report_json(rep));
  CHECK(j.at("seed") == 3);
  CHECK(j.at("claims").at(0).at("computed") == 3);
  CHECK(commvar_report_failed_count(rep) == 0);
  CHECK(commvar_report_claim_count(rep) == j.at("claims").size());
  CHECK(std::string(commvar_report_text(rep)).find("lower-bound") != std::string::npos);
  commvar_report_destroy(rep);
  commvar_context_destroy(ctx);
}

TEST_CASE("errors map to status codes") {
  commvar_context* ctx = commvar_context_create();
  commvar_report* rep = reinterpret_cast<commvar_report*>(1);
  CHECK(commvar_run(ctx, "strata", "no-such-check", &rep) == COMMVAR_USAGE);
  CHECK(rep == nullptr);
  CHECK(std::string(commvar_last_error()).find("no-such-check") != std::string::npos);
  CHECK(commvar_context_set_string(ctx, "pair", "unknown diagram") == COMMVAR_OK);
  CHECK(commvar_run(ctx, "satake", "rank", &rep) == COMMVAR_USAGE);
  CHECK(commvar_run(nullptr, "a", "b", &rep) == COMMVAR_USAGE);
  CHECK(commvar_context_set_int(nullptr, "n", 1) == COMMVAR_USAGE);
  commvar_context_destroy(ctx);
  commvar_report_destroy(nullptr);
}
