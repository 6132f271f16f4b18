#include "pmetric/error.hpp"

namespace pmetric {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonMonotone: return "NonMonotone";
    case ErrorCode::NegativeLocation: return "NegativeLocation";
    case ErrorCode::LevelOutOfRange: return "LevelOutOfRange";
    case ErrorCode::NonPositiveH: return "NonPositiveH";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotAMetric: return "NotAMetric";
    case ErrorCode::IncompatibleTriangleFn: return "IncompatibleTriangleFn";
    case ErrorCode::UnknownPoint: return "UnknownPoint";
    case ErrorCode::NonPositiveT: return "NonPositiveT";
    case ErrorCode::InvalidSpace: return "InvalidSpace";
    case ErrorCode::MissingPoint: return "MissingPoint";
    case ErrorCode::UnsupportedTriangleFn: return "UnsupportedTriangleFn";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::NotLipschitz: return "NotLipschitz";
    case ErrorCode::NotConverging: return "NotConverging";
    case ErrorCode::QOutOfRange: return "QOutOfRange";
    case ErrorCode::NotContraction: return "NotContraction";
    case ErrorCode::KQTooLarge: return "KQTooLarge";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace pmetric
