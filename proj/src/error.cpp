#include "prodforge/error.hpp"

namespace prodforge {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::OutOfRange: return "out-of-range";
    case ErrorCode::ResourceLimit: return "resource-limit";
    case ErrorCode::UnsupportedParameter: return "unsupported-parameter";
    case ErrorCode::SingularWeight: return "singular-weight";
    case ErrorCode::IllConditioned: return "ill-conditioned-transform";
    case ErrorCode::Domain: return "domain-error";
    case ErrorCode::Unsupported: return "unsupported";
    case ErrorCode::UnknownIdentity: return "unknown-identity";
    case ErrorCode::PolicyRefusal: return "policy-refusal";
    case ErrorCode::Parse: return "parse-error";
  }
  return "unknown";
}

}  // namespace prodforge
