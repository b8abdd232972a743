#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hptau {

enum class ErrorKind {
  Parse,
  ZeroConstantTerm,
  BadNormalization,
  InsufficientOrder,
  NotSquare,
  SingularMatrix,
  DegenerateFamily,
  OddLength,
  ParityViolation,
  ShapeMismatch,
  NonDiagonalizableLeading,
  ResonantExponents,
  ZeroParameter,
  InvalidPartition,
};

std::string_view to_string(ErrorKind kind);

/// Every recoverable failure in the library is reported through this type; the
/// kind is what callers (and the CLI exit-code mapping) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hptau
