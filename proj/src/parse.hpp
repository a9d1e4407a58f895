#ifndef RCANON_PARSE_HPP
#define RCANON_PARSE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "expr.hpp"

namespace rcanon {

struct ParseOptions {
  // Free indices named here rank before all others, in list order; the rest
  // compare alphabetically after them.
  std::vector<std::string> free_order;
};

// Grammar (whitespace-insensitive between tokens):
//   poly   := '0' | ['-'] term { ('+'|'-') term }
//   term   := [ rational '*' ] factor { '*' factor }
//   factor := 'R' '(' idx idx ',' idx idx ')'
//   idx    := ('^'|'_') name
//   name   := letter { letter | digit } | integer   (integers: dummies only)
//   rational := ['-'] integer [ '/' positiveInteger ]
// Dummy rows are accepted in any combination and discarded; free rows are
// recorded. Throws SyntaxError / ValidationError.
RPolynomial parse_expression(std::string_view text, const ParseOptions& opts = {});

}  // namespace rcanon

#endif
