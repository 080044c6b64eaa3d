#include "clarkit/error.hpp"

namespace clarkit {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidRotationSystem: return "InvalidRotationSystem";
    case ErrorCode::kEulerViolation: return "EulerViolation";
    case ErrorCode::kNotCubic: return "NotCubic";
    case ErrorCode::kNotThreeConnected: return "NotThreeConnected";
    case ErrorCode::kBadFaceSizes: return "BadFaceSizes";
    case ErrorCode::kWrongPentagonCount: return "WrongPentagonCount";
    case ErrorCode::kSpiralPrecondition: return "SpiralPrecondition";
    case ErrorCode::kSpiralDoesNotClose: return "SpiralDoesNotClose";
    case ErrorCode::kNoSpiralFound: return "NoSpiralFound";
    case ErrorCode::kNotAHexagon: return "NotAHexagon";
    case ErrorCode::kTooManyHexagons: return "TooManyHexagons";
    case ErrorCode::kNotMaximal: return "NotMaximal";
    case ErrorCode::kNotAFragment: return "NotAFragment";
    case ErrorCode::kNoTwoDegreeVertices: return "NoTwoDegreeVertices";
    case ErrorCode::kIncompatibleOrientation: return "IncompatibleOrientation";
    case ErrorCode::kWrongOrder: return "WrongOrder";
    case ErrorCode::kOutOfSupportedRange: return "OutOfSupportedRange";
    case ErrorCode::kParse: return "Parse";
  }
  return "Unknown";
}

bool is_validation_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidRotationSystem:
    case ErrorCode::kEulerViolation:
    case ErrorCode::kNotCubic:
    case ErrorCode::kNotThreeConnected:
    case ErrorCode::kBadFaceSizes:
    case ErrorCode::kWrongPentagonCount:
    case ErrorCode::kSpiralPrecondition:
    case ErrorCode::kSpiralDoesNotClose:
    case ErrorCode::kNoSpiralFound:
      return true;
    default:
      return false;
  }
}

}  // namespace clarkit
