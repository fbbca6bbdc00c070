#include "essdim/error.hpp"

namespace essdim {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NotAbelian: return "NotAbelian";
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::ReductionFailed: return "ReductionFailed";
    case ErrorCode::NotASquare: return "NotASquare";
    case ErrorCode::NotExtendable: return "NotExtendable";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::OddSubset: return "OddSubset";
    case ErrorCode::NotInI1: return "NotInI1";
    case ErrorCode::NotInI2: return "NotInI2";
    case ErrorCode::BadCharacteristic: return "BadCharacteristic";
    case ErrorCode::BadDimension: return "BadDimension";
    case ErrorCode::EvenPrime: return "EvenPrime";
    case ErrorCode::NoRootOfUnity: return "NoRootOfUnity";
    case ErrorCode::AbelianInput: return "AbelianInput";
    case ErrorCode::EmptyIntersection: return "EmptyIntersection";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InconsistentProfile: return "InconsistentProfile";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "Unknown";
}

}  // namespace essdim
