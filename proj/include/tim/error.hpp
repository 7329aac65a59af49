#pragma once

#include <stdexcept>
#include <string>

namespace tim {

enum class ErrorCode {
  InvalidArgument = 1,
  NotHermitian,
  NoConvergence,
  NotPSD,
  DimensionTooLarge,
  WrongSize,
  OutOfRegion,
  BadSubset,
  NotXForm,
  NotSymmetricMiddle,
  NoDefiniteParity,
  FrozenDynamics,
  ZeroCoupling,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure raised by the core library carries one of the codes above so
// the C API can translate it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tim
