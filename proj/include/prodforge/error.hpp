#pragma once

#include <stdexcept>
#include <string>

namespace prodforge {

enum class ErrorCode {
  InvalidArgument,
  OutOfRange,
  ResourceLimit,
  UnsupportedParameter,
  SingularWeight,
  IllConditioned,
  Domain,
  Unsupported,
  UnknownIdentity,
  PolicyRefusal,
  Parse,
};

const char* to_string(ErrorCode code) noexcept;

/// Single exception type for the library; the code drives C API status mapping.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace prodforge
