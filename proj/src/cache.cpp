#include "cache.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "parse.hpp"
#include "render.hpp"
#include "version.hpp"

namespace rcanon {

namespace {

bool has_free(const RMonomial& m) {
  for (const auto& f : m.factors)
    for (const auto& ix : f.slots)
      if (ix.is_free()) return true;
  return false;
}

constexpr const char* kSeparator = " := ";

}  // namespace

RuleCache::RuleCache(std::string path) : path_(std::move(path)), persistent_(true) {
  std::ifstream in(path_);
  if (!in) return;  // absent file: start empty
  std::string header;
  if (!std::getline(in, header)) {
    std::fprintf(stderr, "rcanon: warning: cache file '%s' is unreadable, ignoring\n", path_.c_str());
    return;
  }
  std::string expected = "rcanon-cache " + std::to_string(kCacheFormatVersion) + " " + kVersion;
  if (header != expected) {
    std::fprintf(stderr, "rcanon: warning: cache file '%s' has a stale version, ignoring\n", path_.c_str());
    return;
  }
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::size_t sep = line.find(kSeparator);
    if (sep == std::string::npos) {
      std::fprintf(stderr, "rcanon: warning: malformed cache line in '%s', ignoring file\n", path_.c_str());
      disk_.clear();
      return;
    }
    disk_[line.substr(0, sep)] = line.substr(sep + 4);
  }
}

std::optional<RPolynomial> RuleCache::get(const RMonomial& monic_key) {
  auto it = memory_.find(monic_key);
  if (it != memory_.end()) return it->second;
  if (persistent_ && !has_free(monic_key)) {
    auto dt = disk_.find(monic_text(monic_key));
    if (dt != disk_.end()) {
      try {
        RPolynomial value = parse_expression(dt->second);
        memory_.emplace(monic_key, value);
        return value;
      } catch (const std::exception&) {
        std::fprintf(stderr, "rcanon: warning: bad cache entry ignored\n");
      }
    }
  }
  return std::nullopt;
}

void RuleCache::put(const RMonomial& monic_key, const RPolynomial& value) {
  auto [it, inserted] = memory_.emplace(monic_key, value);
  if (!inserted) return;
  if (persistent_ && !has_free(monic_key)) {
    std::string key = monic_text(monic_key);
    if (!disk_.count(key)) {
      disk_[key] = render_expression(value, RenderFormat::Text);
      save();
    }
  }
}

void RuleCache::save() const {
  std::string tmp = path_ + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) {
      std::fprintf(stderr, "rcanon: warning: cannot write cache file '%s'\n", path_.c_str());
      return;
    }
    out << "rcanon-cache " << kCacheFormatVersion << " " << kVersion << "\n";
    for (const auto& [k, v] : disk_) out << k << kSeparator << v << "\n";
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path_, ec);
  if (ec) std::fprintf(stderr, "rcanon: warning: cannot replace cache file '%s'\n", path_.c_str());
}

}  // namespace rcanon
