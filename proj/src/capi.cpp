#include "lucaskit/lucaskit.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "lucaskit/errors.hpp"
#include "lucaskit/exact_engine.hpp"
#include "lucaskit/reports.hpp"

struct lk_context {
  std::string last_error;
};

struct lk_report {
  lucaskit::Report report;
};

namespace {

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
lk_status guarded(lk_context* ctx, F f) {
  if (ctx) ctx->last_error.clear();
  try {
    f();
    return LK_OK;
  } catch (const lucaskit::Error& e) {
    if (ctx) ctx->last_error = e.what();
    return static_cast<lk_status>(e.code());
  } catch (const std::bad_alloc&) {
    if (ctx) ctx->last_error = "out of memory";
  } catch (const std::exception& e) {
    if (ctx) ctx->last_error = e.what();
  } catch (...) {
    if (ctx) ctx->last_error = "unknown error";
  }
  return LK_ERR_INTERNAL;
}

template <class F>
lk_status term(lk_context* ctx, int k, long n, char** out, F f) {
  return guarded(ctx, [&] {
    if (!out) lucaskit::fail(lucaskit::ErrorCode::Parameter, "out is NULL");
    *out = nullptr;
    char* s = dup(f(lucaskit::SeqParams(k), n).get_str());
    if (!s) throw std::bad_alloc();
    *out = s;
  });
}

}  // namespace

extern "C" {

lk_context* lk_context_create(void) { return new (std::nothrow) lk_context(); }

void lk_context_destroy(lk_context* ctx) { delete ctx; }

const char* lk_last_error(const lk_context* ctx) { return ctx ? ctx->last_error.c_str() : "null context"; }

const char* lk_version(void) { return lucaskit::kVersion; }

const char* lk_status_name(lk_status status) {
  if (status == LK_OK) return "ok";
  if (status == LK_ERR_INTERNAL) return "internal";
  if (status >= LK_ERR_PARAMETER && status <= LK_ERR_SCAN_LIMIT) {
    return lucaskit::error_code_name(static_cast<lucaskit::ErrorCode>(status));
  }
  return "unknown";
}

lk_status lk_lucas_at(lk_context* ctx, int k, long n, char** out) { return term(ctx, k, n, out, lucaskit::lucas_at); }
lk_status lk_fib_at(lk_context* ctx, int k, long n, char** out) { return term(ctx, k, n, out, lucaskit::fib_at); }
lk_status lk_q_at(lk_context* ctx, int k, long n, char** out) { return term(ctx, k, n, out, lucaskit::q_at); }
lk_status lk_h_at(lk_context* ctx, int k, long n, char** out) { return term(ctx, k, n, out, lucaskit::h_at); }

void lk_string_free(char* s) { std::free(s); }

lk_status lk_run(lk_context* ctx, const char* config_json, lk_report** out) {
  return guarded(ctx, [&] {
    if (!config_json || !out) lucaskit::fail(lucaskit::ErrorCode::Parameter, "config_json and out must be non-NULL");
    *out = nullptr;
    auto* r = new lk_report{lucaskit::run_json(config_json)};
    *out = r;
  });
}

int lk_report_exit_code(const lk_report* report) { return report ? report->report.exit_code : 2; }

lk_status lk_report_render(lk_context* ctx, const lk_report* report, const char* format, char** out) {
  return guarded(ctx, [&] {
    if (!report || !format || !out) lucaskit::fail(lucaskit::ErrorCode::Parameter, "report, format and out must be non-NULL");
    *out = nullptr;
    char* s = dup(lucaskit::render(report->report, format));
    if (!s) throw std::bad_alloc();
    *out = s;
  });
}

void lk_report_destroy(lk_report* report) { delete report; }

}  // extern "C"
