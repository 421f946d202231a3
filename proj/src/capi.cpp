#include "skewlab.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "skewlab/report.hpp"
#include "skewlab/util.hpp"

struct skl_ctx {
  skewlab::Session session;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class Fn>
skl_status guard(Fn&& fn) {
  try {
    fn();
    return SKL_OK;
  } catch (const skewlab::refused_error& e) {
    g_last_error = e.what();
    return SKL_REFUSED;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SKL_ERR;
  } catch (...) {
    g_last_error = "unknown error";
    return SKL_ERR;
  }
}

skl_status require(bool cond, const char* msg) {
  if (cond) return SKL_OK;
  g_last_error = msg;
  return SKL_ERR;
}

std::string opt(const char* s) { return s ? std::string(s) : std::string(); }

}  // namespace

extern "C" {

int skl_abi_version(void) { return 1; }

const char* skl_last_error(void) { return g_last_error.c_str(); }

skl_status skl_ctx_new(const char* field, const char* sigma, const char* delta, skl_ctx** out) {
  if (require(field && out, "field and out must be non-NULL") != SKL_OK) return SKL_ERR;
  return guard([&] {
    auto ctx = new skl_ctx{skewlab::make_session(field, opt(sigma), opt(delta))};
    *out = ctx;
  });
}

void skl_ctx_free(skl_ctx* ctx) { delete ctx; }

skl_status skl_set_jobs(skl_ctx* ctx, int jobs) {
  if (require(ctx != nullptr, "ctx must be non-NULL") != SKL_OK) return SKL_ERR;
  if (require(jobs >= 1, "jobs must be >= 1") != SKL_OK) return SKL_ERR;
  ctx->session.jobs = jobs;
  return SKL_OK;
}

skl_status skl_warnings(skl_ctx* ctx, char** out) {
  if (require(ctx && out, "ctx and out must be non-NULL") != SKL_OK) return SKL_ERR;
  std::string all;
  for (const auto& w : ctx->session.warnings) {
    all += w;
    all += '\n';
  }
  *out = dup_string(all);
  return SKL_OK;
}

void skl_free(char* s) { std::free(s); }

skl_status skl_mul(skl_ctx* ctx, const char* g, const char* h, char** out) {
  if (require(ctx && g && h && out, "arguments must be non-NULL") != SKL_OK) return SKL_ERR;
  return guard([&] { *out = dup_string(skewlab::report_mul(ctx->session, g, h)["result"]); });
}

skl_status skl_divmod(skl_ctx* ctx, const char* g, const char* f, const char* side,
                      char** quotient, char** remainder) {
  if (require(ctx && g && f && side && quotient && remainder, "arguments must be non-NULL") != SKL_OK)
    return SKL_ERR;
  return guard([&] {
    auto j = skewlab::report_divmod(ctx->session, g, f, side);
    *quotient = dup_string(j["quotient"]);
    *remainder = dup_string(j["remainder"]);
  });
}

skl_status skl_gcrd(skl_ctx* ctx, const char* g, const char* h, char** out) {
  if (require(ctx && g && h && out, "arguments must be non-NULL") != SKL_OK) return SKL_ERR;
  return guard([&] { *out = dup_string(skewlab::report_gcrd(ctx->session, g, h)["result"]); });
}

skl_status skl_lclm(skl_ctx* ctx, const char* g, const char* h, char** out) {
  if (require(ctx && g && h && out, "arguments must be non-NULL") != SKL_OK) return SKL_ERR;
  return guard([&] { *out = dup_string(skewlab::report_lclm(ctx->session, g, h)["result"]); });
}

skl_status skl_irreducible(skl_ctx* ctx, const char* f, char** json) {
  if (require(ctx && f && json, "arguments must be non-NULL") != SKL_OK) return SKL_ERR;
  return guard([&] { *json = dup_string(skewlab::report_irreducible(ctx->session, f).dump()); });
}

skl_status skl_census(skl_ctx* ctx, int m, char** json) {
  if (require(ctx && json, "arguments must be non-NULL") != SKL_OK) return SKL_ERR;
  return guard([&] { *json = dup_string(skewlab::report_census(ctx->session, m).dump()); });
}

skl_status skl_algebra_info(skl_ctx* ctx, const char* f, char** json) {
  if (require(ctx && f && json, "arguments must be non-NULL") != SKL_OK) return SKL_ERR;
  return guard([&] { *json = dup_string(skewlab::report_algebra_info(ctx->session, f).dump()); });
}

skl_status skl_nucleus(skl_ctx* ctx, const char* f, const char* which, char** json) {
  if (require(ctx && f && which && json, "arguments must be non-NULL") != SKL_OK) return SKL_ERR;
  return guard([&] { *json = dup_string(skewlab::report_nucleus(ctx->session, f, which).dump()); });
}

skl_status skl_semi_invariant(skl_ctx* ctx, const char* f, const char* subring, char** json) {
  if (require(ctx && f && json, "arguments must be non-NULL") != SKL_OK) return SKL_ERR;
  return guard([&] {
    *json = dup_string(skewlab::report_semi_invariant(ctx->session, f, opt(subring)).dump());
  });
}

skl_status skl_find_semi_invariant(skl_ctx* ctx, int degree, char** json) {
  if (require(ctx && json, "arguments must be non-NULL") != SKL_OK) return SKL_ERR;
  return guard([&] {
    *json = dup_string(skewlab::report_find_semi_invariant(ctx->session, degree).dump());
  });
}

skl_status skl_factor(skl_ctx* ctx, const char* f, char** json) {
  if (require(ctx && f && json, "arguments must be non-NULL") != SKL_OK) return SKL_ERR;
  return guard([&] { *json = dup_string(skewlab::report_factor(ctx->session, f).dump()); });
}

skl_status skl_oracle_factor(skl_ctx* ctx, const char* f, char** json) {
  if (require(ctx && f && json, "arguments must be non-NULL") != SKL_OK) return SKL_ERR;
  return guard([&] { *json = dup_string(skewlab::report_oracle_factor(ctx->session, f).dump()); });
}

skl_status skl_certify(skl_ctx* ctx, const char* family, int m, const char* a, char** json) {
  if (require(ctx && family && a && json, "arguments must be non-NULL") != SKL_OK) return SKL_ERR;
  return guard([&] {
    *json = dup_string(skewlab::report_certify(ctx->session, family, m, a).dump());
  });
}

}  // extern "C"
