#include "rcanon/rcanon.h"

#include <chrono>
#include <cstring>
#include <memory>
#include <string>

#include "cache.hpp"
#include "errors.hpp"
#include "expr.hpp"
#include "multiterm.hpp"
#include "parse.hpp"
#include "render.hpp"
#include "version.hpp"

struct rcanon_poly {
  rcanon::RPolynomial value;
};

struct rcanon_options {
  rcanon::ParseOptions parse;
  rcanon_method method = RCANON_METHOD_REBE;
  std::string cache_path;
  std::unique_ptr<rcanon::RuleCache> cache;
};

namespace {

thread_local std::string g_last_error;

rcanon_status fail(rcanon_status st, const char* what) {
  g_last_error = what ? what : "unknown error";
  return st;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* rcanon_version(void) { return rcanon::kVersion; }

const char* rcanon_last_error(void) { return g_last_error.c_str(); }

rcanon_options* rcanon_options_new(void) { return new (std::nothrow) rcanon_options(); }

void rcanon_options_free(rcanon_options* opts) { delete opts; }

rcanon_status rcanon_options_set_free_order(rcanon_options* opts, const char* names) {
  if (!opts || !names) return fail(RCANON_INVALID_ARGUMENT, "null argument");
  opts->parse.free_order.clear();
  std::string cur;
  for (const char* p = names;; ++p) {
    if (*p == ',' || *p == '\0') {
      if (!cur.empty()) opts->parse.free_order.push_back(cur);
      cur.clear();
      if (*p == '\0') break;
    } else if (!std::isspace(static_cast<unsigned char>(*p))) {
      cur += *p;
    }
  }
  return RCANON_OK;
}

rcanon_status rcanon_options_set_method(rcanon_options* opts, rcanon_method method) {
  if (!opts) return fail(RCANON_INVALID_ARGUMENT, "null options");
  if (method != RCANON_METHOD_REBE && method != RCANON_METHOD_DIRECT)
    return fail(RCANON_INVALID_ARGUMENT, "bad method");
  opts->method = method;
  return RCANON_OK;
}

rcanon_status rcanon_options_set_cache_path(rcanon_options* opts, const char* path) {
  if (!opts || !path) return fail(RCANON_INVALID_ARGUMENT, "null argument");
  try {
    opts->cache_path = path;
    opts->cache = std::make_unique<rcanon::RuleCache>(opts->cache_path);
    return RCANON_OK;
  } catch (const std::exception& e) {
    return fail(RCANON_INTERNAL_ERROR, e.what());
  }
}

rcanon_status rcanon_parse(const char* text, const rcanon_options* opts, rcanon_poly** out) {
  if (!text || !out) return fail(RCANON_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  try {
    rcanon::ParseOptions popts = opts ? opts->parse : rcanon::ParseOptions{};
    auto poly = std::make_unique<rcanon_poly>();
    poly->value = rcanon::parse_expression(text, popts);
    *out = poly.release();
    return RCANON_OK;
  } catch (const rcanon::SyntaxError& e) {
    return fail(RCANON_SYNTAX_ERROR, e.what());
  } catch (const rcanon::ValidationError& e) {
    return fail(RCANON_VALIDATION_ERROR, e.what());
  } catch (const std::exception& e) {
    return fail(RCANON_INTERNAL_ERROR, e.what());
  }
}

rcanon_status rcanon_canonicalize(const rcanon_poly* poly, rcanon_mode mode,
                                  const rcanon_options* opts, rcanon_poly** out,
                                  rcanon_stats* stats) {
  if (!poly || !out) return fail(RCANON_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  auto start = std::chrono::steady_clock::now();
  try {
    auto result = std::make_unique<rcanon_poly>();
    rcanon::NormalStats nstats;
    if (mode == RCANON_MODE_PRE) {
      result->value = rcanon::prenormal_polynomial(poly->value, &nstats.pnom);
    } else if (mode == RCANON_MODE_NORMAL) {
      rcanon::NormalOptions nopts;
      nopts.stats = &nstats;
      if (opts) {
        nopts.method = opts->method == RCANON_METHOD_DIRECT
                           ? rcanon::NormalOptions::Method::Direct
                           : rcanon::NormalOptions::Method::Rebe;
        nopts.cache = opts->cache.get();
      }
      result->value = rcanon::normal(poly->value, nopts);
    } else {
      return fail(RCANON_INVALID_ARGUMENT, "bad mode");
    }
    if (stats) {
      auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
      stats->branch_count = nstats.pnom.branches;
      stats->prune_count = nstats.pnom.pruned;
      stats->equation_count = nstats.equations;
      stats->cache_hits = nstats.cache_hits;
      stats->elapsed_us = static_cast<uint64_t>(us);
    }
    *out = result.release();
    return RCANON_OK;
  } catch (const rcanon::SyntaxError& e) {
    return fail(RCANON_SYNTAX_ERROR, e.what());
  } catch (const rcanon::ValidationError& e) {
    return fail(RCANON_VALIDATION_ERROR, e.what());
  } catch (const std::exception& e) {
    return fail(RCANON_INTERNAL_ERROR, e.what());
  }
}

rcanon_status rcanon_render(const rcanon_poly* poly, rcanon_format format, char** out) {
  if (!poly || !out) return fail(RCANON_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  try {
    std::string text = rcanon::render_expression(
        poly->value, format == RCANON_FORMAT_JSON ? rcanon::RenderFormat::Json : rcanon::RenderFormat::Text);
    *out = dup_string(text);
    if (!*out) return fail(RCANON_INTERNAL_ERROR, "out of memory");
    return RCANON_OK;
  } catch (const std::exception& e) {
    return fail(RCANON_INTERNAL_ERROR, e.what());
  }
}

int rcanon_poly_equal(const rcanon_poly* a, const rcanon_poly* b) {
  if (!a || !b) return 0;
  return a->value == b->value ? 1 : 0;
}

int rcanon_poly_is_zero(const rcanon_poly* poly) { return poly && poly->value.is_zero() ? 1 : 0; }

size_t rcanon_poly_term_count(const rcanon_poly* poly) {
  return poly ? poly->value.terms.size() : 0;
}

void rcanon_poly_free(rcanon_poly* poly) { delete poly; }

void rcanon_string_free(char* s) { std::free(s); }

}  // extern "C"
