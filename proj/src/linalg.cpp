#include "linalg.hpp"

#include <stdexcept>

namespace rcanon {

std::vector<Rational> apply_rules(const std::map<int, std::vector<Rational>>& rules,
                                  std::vector<Rational> v) {
  for (const auto& [pivot, row] : rules) {
    if (pivot < 0 || static_cast<std::size_t>(pivot) >= v.size() || row.size() != v.size())
      throw std::invalid_argument("apply_rules: shape mismatch");
    if (is_zero(v[pivot])) continue;
    Rational factor = v[pivot];
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= factor * row[j];
  }
  return v;
}

}  // namespace rcanon
