#pragma once

#include <stdexcept>
#include <string>

namespace solv {

/// Base error carrying a short machine-readable code next to the message.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(detail), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

struct DimensionError : Error {
  explicit DimensionError(const std::string& d) : Error("dimension", d) {}
};

struct DomainError : Error {
  explicit DomainError(const std::string& d) : Error("domain", d) {}
};

struct InvalidInput : Error {
  explicit InvalidInput(const std::string& d) : Error("invalid_input", d) {}
};

struct ArithmeticError : Error {
  explicit ArithmeticError(const std::string& d) : Error("arithmetic", d) {}
};

}  // namespace solv
