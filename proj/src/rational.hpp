#ifndef RCANON_RATIONAL_HPP
#define RCANON_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace rcanon {

// Exact rational arithmetic. mpq_class keeps the canonical form we rely on
// (reduced, positive denominator) as long as every value is canonicalized on
// construction, which the helpers below guarantee.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p" or "p/q" with optional leading '-'. Throws std::invalid_argument
// on garbage.
Rational rational_from_string(const std::string& text);

std::string to_string(const Rational& r);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace rcanon

#endif
