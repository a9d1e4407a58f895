#ifndef RCANON_CACHE_HPP
#define RCANON_CACHE_HPP

#include <map>
#include <optional>
#include <string>

#include "expr.hpp"
#include "multiterm.hpp"

namespace rcanon {

// Normal-form cache keyed by monic pre-normal component text. The in-memory
// layer holds everything computed this session; the optional file layer
// persists only components without free indices (rule sets for free-carrying
// components depend on the configured free order). File writes are atomic
// (temp file + rename). Version-mismatched or unreadable files are treated as
// absent, with a warning on stderr.
class RuleCache {
 public:
  RuleCache() = default;
  explicit RuleCache(std::string path);

  std::optional<RPolynomial> get(const RMonomial& monic_key);
  void put(const RMonomial& monic_key, const RPolynomial& value);

  std::size_t size() const { return memory_.size(); }

 private:
  void save() const;

  std::string path_;
  bool persistent_ = false;
  std::map<RMonomial, RPolynomial, MonicLess> memory_;
  std::map<std::string, std::string> disk_;  // key text -> value text
};

}  // namespace rcanon

#endif
