// rcanon command line front end; talks to the core through the C API only.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rcanon/rcanon.h"

namespace {

int status_to_exit(rcanon_status st) {
  switch (st) {
    case RCANON_OK: return 0;
    case RCANON_SYNTAX_ERROR: return 1;
    case RCANON_VALIDATION_ERROR: return 2;
    default: return 3;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rcanon: canonicalize polynomials in the Riemann curvature tensor"};
  app.set_version_flag("--version", rcanon_version());

  std::string mode = "normal";
  app.add_option("--mode", mode, "pre (monoterm) or normal (monoterm + Bianchi)")
      ->check(CLI::IsMember({"pre", "normal"}));
  std::string method = "rebe";
  app.add_option("--method", method, "normal-form elimination method")
      ->check(CLI::IsMember({"rebe", "direct"}));
  std::string free_order;
  app.add_option("--free-order", free_order, "comma-separated free index order");
  std::string format = "text";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  std::string cache_path;
  app.add_option("--cache", cache_path, "persistent normal-form cache file");
  bool stats_flag = false;
  app.add_flag("--stats", stats_flag, "print search statistics to stderr");
  std::string input_arg = "-";
  app.add_option("input", input_arg, "input file, or '-' for standard input");

  CLI11_PARSE(app, argc, argv);

  std::string text;
  if (input_arg == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(input_arg);
    if (!in) {
      std::fprintf(stderr, "rcanon: cannot open '%s'\n", input_arg.c_str());
      return 3;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }

  rcanon_options* opts = rcanon_options_new();
  if (!free_order.empty()) rcanon_options_set_free_order(opts, free_order.c_str());
  rcanon_options_set_method(opts, method == "direct" ? RCANON_METHOD_DIRECT : RCANON_METHOD_REBE);
  if (!cache_path.empty() && rcanon_options_set_cache_path(opts, cache_path.c_str()) != RCANON_OK)
    std::fprintf(stderr, "rcanon: warning: %s\n", rcanon_last_error());

  rcanon_poly* input = nullptr;
  rcanon_status st = rcanon_parse(text.c_str(), opts, &input);
  if (st != RCANON_OK) {
    std::fprintf(stderr, "rcanon: %s\n", rcanon_last_error());
    rcanon_options_free(opts);
    return status_to_exit(st);
  }

  rcanon_poly* result = nullptr;
  rcanon_stats stats{};
  st = rcanon_canonicalize(input, mode == "pre" ? RCANON_MODE_PRE : RCANON_MODE_NORMAL, opts,
                           &result, &stats);
  if (st != RCANON_OK) {
    std::fprintf(stderr, "rcanon: %s\n", rcanon_last_error());
    rcanon_poly_free(input);
    rcanon_options_free(opts);
    return status_to_exit(st);
  }

  char* rendered = nullptr;
  st = rcanon_render(result, format == "json" ? RCANON_FORMAT_JSON : RCANON_FORMAT_TEXT, &rendered);
  if (st != RCANON_OK) {
    std::fprintf(stderr, "rcanon: %s\n", rcanon_last_error());
  } else {
    std::printf("%s\n", rendered);
    rcanon_string_free(rendered);
  }

  if (stats_flag) {
    std::fprintf(stderr, "branches: %llu\n", static_cast<unsigned long long>(stats.branch_count));
    std::fprintf(stderr, "pruned: %llu\n", static_cast<unsigned long long>(stats.prune_count));
    std::fprintf(stderr, "equations: %llu\n", static_cast<unsigned long long>(stats.equation_count));
    std::fprintf(stderr, "cache hits: %llu\n", static_cast<unsigned long long>(stats.cache_hits));
    std::fprintf(stderr, "time: %.3f ms\n", static_cast<double>(stats.elapsed_us) / 1000.0);
  }

  rcanon_poly_free(result);
  rcanon_poly_free(input);
  rcanon_options_free(opts);
  return status_to_exit(st);
}
