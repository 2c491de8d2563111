#pragma once

#include <stdexcept>
#include <string>

namespace qdtough {

enum class ErrorKind {
  InvalidSpec,
  InvalidArgument,
  EmptyResult,
  Disconnected,
  Capacity,
  NumericFailure,
  Parse,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised when an eigensolve hits its iteration cap without meeting the
// residual requirement.
class NumericFailure : public Error {
 public:
  NumericFailure(const std::string& what, double last_residual)
      : Error(ErrorKind::NumericFailure, what), last_residual_(last_residual) {}

  double last_residual() const noexcept { return last_residual_; }

 private:
  double last_residual_;
};

}  // namespace qdtough
