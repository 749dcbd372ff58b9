#include "commvar/commvar.h"

#include "commvar/checks.hpp"
#include "commvar/error.hpp"

#include <new>
#include <string>

struct commvar_context {
  commvar::Params params;
};

struct commvar_report {
  commvar::Report report;
  std::string json;
  std::string text;
};

namespace {

thread_local std::string last_error;

commvar_status fail(commvar_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class F>
commvar_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const commvar::UsageError& e) {
    return fail(COMMVAR_USAGE, e.what());
  } catch (const commvar::ParameterError& e) {
    return fail(COMMVAR_USAGE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(COMMVAR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(COMMVAR_INTERNAL, e.what());
  } catch (...) {
    return fail(COMMVAR_INTERNAL, "unknown error");
  }
}

}  // namespace

extern "C" {

const char* commvar_version(void) { return COMMVAR_VERSION; }

const char* commvar_last_error(void) { return last_error.c_str(); }

commvar_context* commvar_context_create(void) { return new (std::nothrow) commvar_context(); }

void commvar_context_destroy(commvar_context* ctx) { delete ctx; }

commvar_status commvar_context_set_int(commvar_context* ctx, const char* key, long value) {
  if (!ctx || !key) return fail(COMMVAR_USAGE, "null argument");
  return guarded([&] {
    ctx->params.set_int(key, value);
    return COMMVAR_OK;
  });
}

commvar_status commvar_context_set_string(commvar_context* ctx, const char* key, const char* value) {
  if (!ctx || !key || !value) return fail(COMMVAR_USAGE, "null argument");
  return guarded([&] {
    ctx->params.set_string(key, value);
    return COMMVAR_OK;
  });
}

commvar_status commvar_context_set_flag(commvar_context* ctx, const char* key) {
  if (!ctx || !key) return fail(COMMVAR_USAGE, "null argument");
  return guarded([&] {
    ctx->params.set_flag(key);
    return COMMVAR_OK;
  });
}

commvar_status commvar_context_set_seed(commvar_context* ctx, uint64_t seed) {
  if (!ctx) return fail(COMMVAR_USAGE, "null argument");
  ctx->params.set_seed(seed);
  return COMMVAR_OK;
}

commvar_status commvar_run(commvar_context* ctx, const char* module, const char* check, commvar_report** out) {
  if (out) *out = nullptr;
  if (!ctx || !module || !check || !out) return fail(COMMVAR_USAGE, "null argument");
  return guarded([&] {
    commvar::Report r = commvar::run_check(module, check, ctx->params);
    auto* rep = new commvar_report{std::move(r), {}, {}};
    rep->json = rep->report.json_text();
    rep->text = rep->report.text();
    *out = rep;
    return rep->report.failed_count() == 0 ? COMMVAR_OK : COMMVAR_CLAIM_FAILED;
  });
}

const char* commvar_report_json(const commvar_report* report) { return report ? report->json.c_str() : ""; }

const char* commvar_report_text(const commvar_report* report) { return report ? report->text.c_str() : ""; }

size_t commvar_report_claim_count(const commvar_report* report) {
  return report ? report->report.claims().size() : 0;
}

size_t commvar_report_failed_count(const commvar_report* report) {
  return report ? report->report.failed_count() : 0;
}

size_t commvar_report_inconclusive_count(const commvar_report* report) {
  return report ? report->report.inconclusive_count() : 0;
}

void commvar_report_destroy(commvar_report* report) { delete report; }

size_t commvar_check_count(void) { return commvar::available_checks().size(); }

commvar_status commvar_check_name(size_t i, const char** module, const char** check, const char** summary) {
  const auto& all = commvar::available_checks();
  if (i >= all.size()) return fail(COMMVAR_USAGE, "check index out of range");
  if (module) *module = all[i].module.c_str();
  if (check) *check = all[i].check.c_str();
  if (summary) *summary = all[i].summary.c_str();
  return COMMVAR_OK;
}

}  // extern "C"
