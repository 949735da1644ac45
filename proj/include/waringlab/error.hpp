#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace waringlab {

enum class ErrorKind {
  NotPrime,
  NonInvertible,
  InvalidOrder,
  InvalidParameter,
  InvalidInput,
  AmbientMismatch,
  RefuseExhaustive,
  RefuseQuadratic,
  CountOverflow,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// Library-wide exception. The message names the violated precondition.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Refusals are scale limits, not malformed input.
  bool is_refusal() const noexcept {
    return kind_ == ErrorKind::RefuseExhaustive ||
           kind_ == ErrorKind::RefuseQuadratic;
  }

 private:
  ErrorKind kind_;
};

}  // namespace waringlab
