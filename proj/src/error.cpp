#include "tim/error.hpp"

namespace tim {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::WrongSize: return "WrongSize";
    case ErrorCode::OutOfRegion: return "OutOfRegion";
    case ErrorCode::BadSubset: return "BadSubset";
    case ErrorCode::NotXForm: return "NotXForm";
    case ErrorCode::NotSymmetricMiddle: return "NotSymmetricMiddle";
    case ErrorCode::NoDefiniteParity: return "NoDefiniteParity";
    case ErrorCode::FrozenDynamics: return "FrozenDynamics";
    case ErrorCode::ZeroCoupling: return "ZeroCoupling";
  }
  return "Unknown";
}

}  // namespace tim
