#include "rational.hpp"

#include <cctype>
#include <stdexcept>

namespace rcanon {

Rational rational_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t i = text[0] == '-' ? 1 : 0;
  if (i == text.size()) throw std::invalid_argument("bad rational literal: " + text);
  bool slash_seen = false;
  for (std::size_t k = i; k < text.size(); ++k) {
    if (text[k] == '/' && !slash_seen && k > i && k + 1 < text.size()) {
      slash_seen = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(text[k])))
      throw std::invalid_argument("bad rational literal: " + text);
  }
  Rational r;
  if (r.set_str(text, 10) != 0) throw std::invalid_argument("bad rational literal: " + text);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace rcanon
