#include "commvar/commvar.h"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

namespace {

constexpr int kExitUsage = 2;

int list_checks() {
  for (size_t i = 0; i < commvar_check_count(); ++i) {
    const char *module = nullptr, *check = nullptr, *summary = nullptr;
    commvar_check_name(i, &module, &check, &summary);
    std::cout << module << ' ' << check << "  " << summary << '\n';
  }
  return 0;
}

bool parse_seed(const std::string& text, std::uint64_t& out) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) return false;
  try {
    out = std::stoull(text);
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification checks for commuting varieties of symmetric pairs"};
  app.set_version_flag("--version", std::string(commvar_version()));

  std::string module, check;
  app.add_option("module", module, "exactlin, liealg, satake, strata, nilpotent, excep, spinor, or list")->required();
  app.add_option("check", check, "check name within the module");

  const std::pair<const char*, const char*> int_opts[] = {
      {"n", "first size parameter"}, {"m", "second size parameter"}, {"q", "stratum index"},
      {"samples", "random samples (default 50)"}, {"max", "bound on n+m for nilpotent classify"}};
  const std::pair<const char*, const char*> string_opts[] = {
      {"pair", "diagram label, or pair choice alpha|beta for excep"},
      {"jt", "signed Jordan type, e.g. 3a,1b,2a:2b"},
      {"family", "BDI, AIII_gl or DIII"},
      {"catalog", "Satake catalog file (default: built in)"}};
  std::map<std::string, long> ints;
  for (const auto& [key, help] : int_opts) app.add_option(std::string("--") + key, ints[key], help);
  std::map<std::string, std::string> strings;
  for (const auto& [key, help] : string_opts) app.add_option(std::string("--") + key, strings[key], help);
  std::string seed_text;
  app.add_option("--seed", seed_text, "random seed (default 0; COMMVAR_SEED overrides)");
  bool connected = false;
  app.add_flag("--connected", connected, "restrict subdiagrams to connected proper classes");
  bool as_json = false, as_text = false;
  auto* json_flag = app.add_flag("--json", as_json, "JSON report (default)");
  auto* text_flag = app.add_flag("--text", as_text, "human-readable table");
  json_flag->excludes(text_flag);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (module == "list") return list_checks();
  if (check.empty()) {
    std::cerr << "error: missing check name (try 'commvar list')\n";
    return kExitUsage;
  }

  std::uint64_t seed = 0;
  if (!seed_text.empty() && !parse_seed(seed_text, seed)) {
    std::cerr << "error: --seed must be a non-negative integer\n";
    return kExitUsage;
  }
  if (const char* env = std::getenv("COMMVAR_SEED"); env && *env) {
    if (!parse_seed(env, seed)) {
      std::cerr << "error: COMMVAR_SEED must be a non-negative integer\n";
      return kExitUsage;
    }
  }

  commvar_context* ctx = commvar_context_create();
  if (!ctx) {
    std::cerr << "error: out of memory\n";
    return 1;
  }
  commvar_context_set_seed(ctx, seed);
  for (const auto& [key, value] : ints)
    if (app.count("--" + key)) commvar_context_set_int(ctx, key.c_str(), value);
  for (const auto& [key, value] : strings)
    if (app.count("--" + key)) commvar_context_set_string(ctx, key.c_str(), value.c_str());
  if (connected) commvar_context_set_flag(ctx, "connected");

  commvar_report* report = nullptr;
  const commvar_status st = commvar_run(ctx, module.c_str(), check.c_str(), &report);
  commvar_context_destroy(ctx);
  if (st == COMMVAR_USAGE) {
    std::cerr << "error: " << commvar_last_error() << '\n';
    return kExitUsage;
  }
  if (st == COMMVAR_INTERNAL) {
    std::cerr << "internal error: " << commvar_last_error() << '\n';
    return 1;
  }
  std::cout << (as_text ? commvar_report_text(report) : commvar_report_json(report));
  commvar_report_destroy(report);
  return st == COMMVAR_OK ? 0 : 1;
}
