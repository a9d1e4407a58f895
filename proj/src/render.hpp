#ifndef RCANON_RENDER_HPP
#define RCANON_RENDER_HPP

#include <string>

#include "expr.hpp"

namespace rcanon {

enum class RenderFormat { Text, Json };

// Free indices render with their recorded row; dummies render upper at their
// first occurrence in the term and lower at the second. parse ∘ render is the
// identity on validated polynomials (under the same free-order options).
std::string render_expression(const RPolynomial& p, RenderFormat fmt = RenderFormat::Text);

// Monic text of a single monomial (no coefficient), used as cache key.
std::string monic_text(const RMonomial& m);

}  // namespace rcanon

#endif
