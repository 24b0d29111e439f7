#include "gtsymp/error.hpp"

namespace gtsymp {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::RepeatedIndex: return "RepeatedIndex";
    case ErrorCode::IndexOutOfAlgebra: return "IndexOutOfAlgebra";
    case ErrorCode::DimensionCapExceeded: return "DimensionCapExceeded";
    case ErrorCode::NotInSpan: return "NotInSpan";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::NotHighest: return "NotHighest";
    case ErrorCode::DegenerateWeight: return "DegenerateWeight";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::ShapeError: return "ShapeError";
    case ErrorCode::BarNotValid: return "BarNotValid";
    case ErrorCode::InvalidWeight: return "InvalidWeight";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace gtsymp
