#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace holext {

enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  CoincidentPoints,
  LineMissesBall,
  TangentLine,
  ParameterOnBoundary,
  VerticalLine,
  NotOnSphere,
  DenominatorVanishes,
  BandwidthTooSmall,
  OutsideSliceDisc,
  SliceIsZero,
  NonFiniteSample,
  PoleTooClose,
  CenterOnCircle,
  NormalizationFailed,
  RadialInconsistency,
  TruncationInsufficient,
  IllConditioned,
  PlaneMismatch,
  UnknownDemo,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace holext
