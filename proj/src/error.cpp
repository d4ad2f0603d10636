#include "bshm/error.hpp"

namespace bshm {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotHadamard: return "NotHadamard";
    case ErrorCode::TooManyValues: return "TooManyValues";
    case ErrorCode::InconsistentKa: return "InconsistentKa";
    case ErrorCode::NotAPds: return "NotAPds";
    case ErrorCode::NotAPacking: return "NotAPacking";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::NotStronglyRegular: return "NotStronglyRegular";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::NoAllOnesRow: return "NoAllOnesRow";
    case ErrorCode::ParamMismatch: return "ParamMismatch";
    case ErrorCode::NotUnbiased: return "NotUnbiased";
    case ErrorCode::NotType1: return "NotType1";
    case ErrorCode::StructureViolation: return "StructureViolation";
    case ErrorCode::CertificateMismatch: return "CertificateMismatch";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace bshm
