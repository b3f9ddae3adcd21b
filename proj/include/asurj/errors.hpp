#pragma once

#include <stdexcept>
#include <string>

namespace asurj {

// Syntax error in polynomial / point text, with 1-based position.
struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(const std::string& msg, int line_, int column_)
      : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                           std::to_string(column_) + ")"),
        line(line_),
        column(column_) {}
};

// Root iteration did not reach the residual target within max_iter.
struct RootFindingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A floating-point evaluation produced NaN or infinity.
struct NonFiniteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace asurj
