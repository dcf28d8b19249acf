#pragma once

#include <stdexcept>
#include <string>

namespace qcat {

// Thrown when an exhaustive-search or table-size guard refuses an input.
struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown by css_split when a generator mixes X and Z support.
struct NotCssError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Code-definition file problem, carrying a 1-based line number.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_) + ": " + message),
        line(line_) {}
};

}  // namespace qcat
