#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace binform {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  SingularMap,
  NoConvergence,
  DomainError,
  DegreeTooLow,
  DiscriminantZero,
  QuadratureFailure,
  DegenerateRoot,
  NotDefinite,
  DegenerateAngles,
};

/// Stable machine-readable name, e.g. "DiscriminantZero".
std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return to_string(code_); }

 private:
  ErrorCode code_;
};

}  // namespace binform
