#include "holext/errors.hpp"

namespace holext {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::LineMissesBall: return "LineMissesBall";
    case ErrorCode::TangentLine: return "TangentLine";
    case ErrorCode::ParameterOnBoundary: return "ParameterOnBoundary";
    case ErrorCode::VerticalLine: return "VerticalLine";
    case ErrorCode::NotOnSphere: return "NotOnSphere";
    case ErrorCode::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorCode::BandwidthTooSmall: return "BandwidthTooSmall";
    case ErrorCode::OutsideSliceDisc: return "OutsideSliceDisc";
    case ErrorCode::SliceIsZero: return "SliceIsZero";
    case ErrorCode::NonFiniteSample: return "NonFiniteSample";
    case ErrorCode::PoleTooClose: return "PoleTooClose";
    case ErrorCode::CenterOnCircle: return "CenterOnCircle";
    case ErrorCode::NormalizationFailed: return "NormalizationFailed";
    case ErrorCode::RadialInconsistency: return "RadialInconsistency";
    case ErrorCode::TruncationInsufficient: return "TruncationInsufficient";
    case ErrorCode::IllConditioned: return "IllConditioned";
    case ErrorCode::PlaneMismatch: return "PlaneMismatch";
    case ErrorCode::UnknownDemo: return "UnknownDemo";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace holext
