#pragma once

#include <stdexcept>
#include <string>

namespace clarkit {

enum class ErrorCode {
  kInvalidRotationSystem,
  kEulerViolation,
  kNotCubic,
  kNotThreeConnected,
  kBadFaceSizes,
  kWrongPentagonCount,
  kSpiralPrecondition,
  kSpiralDoesNotClose,
  kNoSpiralFound,
  kNotAHexagon,
  kTooManyHexagons,
  kNotMaximal,
  kNotAFragment,
  kNoTwoDegreeVertices,
  kIncompatibleOrientation,
  kWrongOrder,
  kOutOfSupportedRange,
  kParse,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the text readers. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& what)
      : Error(ErrorCode::kParse, "line " + std::to_string(line) + ", column " +
                                     std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

// True for codes that mean "the input is a well-formed graph but not a
// (supported) fullerene", as opposed to malformed input or internal failure.
bool is_validation_error(ErrorCode code);

}  // namespace clarkit
