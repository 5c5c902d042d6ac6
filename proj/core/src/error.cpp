#include "binform/error.hpp"

namespace binform {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SingularMap: return "SingularMap";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::DegreeTooLow: return "DegreeTooLow";
    case ErrorCode::DiscriminantZero: return "DiscriminantZero";
    case ErrorCode::QuadratureFailure: return "QuadratureFailure";
    case ErrorCode::DegenerateRoot: return "DegenerateRoot";
    case ErrorCode::NotDefinite: return "NotDefinite";
    case ErrorCode::DegenerateAngles: return "DegenerateAngles";
  }
  return "Unknown";
}

}  // namespace binform
