#include "hornich/error.hpp"

namespace hornich {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::LeadingZeroDivisor: return "LeadingZeroDivisor";
    case ErrorCode::NotUnitConstant: return "NotUnitConstant";
    case ErrorCode::NotZeroConstant: return "NotZeroConstant";
    case ErrorCode::OutsideDisk: return "OutsideDisk";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::SingularPoint: return "SingularPoint";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::BadParam: return "BadParam";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownTheorem: return "UnknownTheorem";
    case ErrorCode::BadProfile: return "BadProfile";
  }
  return "Unknown";
}

bool is_numerical(ErrorCode code) {
  switch (code) {
    case ErrorCode::LeadingZeroDivisor:
    case ErrorCode::NotUnitConstant:
    case ErrorCode::NotZeroConstant:
    case ErrorCode::OutsideDisk:
    case ErrorCode::Overflow:
    case ErrorCode::SingularPoint:
      return true;
    default:
      return false;
  }
}

}  // namespace hornich
