#pragma once

#include <stdexcept>
#include <string>

namespace ternary {

// Every precondition failure carries a machine-readable kind, surfaced by the
// CLI as error.kind.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

// Malformed textual input (polynomials, matrices, JSON). Mapped to exit code 2.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error("parse_error", what) {}
};

}  // namespace ternary
