#ifndef RCANON_ERRORS_HPP
#define RCANON_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rcanon {

// Malformed input text. `position` is a 0-based byte offset into the input.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : std::runtime_error("syntax error at position " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Well-formed text that violates a semantic invariant (index multiplicities,
// free-row consistency, connectivity preconditions, ...).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rcanon

#endif
