#pragma once

#include <stdexcept>
#include <string>

namespace bshm {

enum class ErrorCode {
  InvalidArgument,
  OutOfRange,
  ParseError,
  RankMismatch,
  LimitExceeded,
  BudgetExceeded,
  NotHadamard,
  TooManyValues,
  InconsistentKa,
  NotAPds,
  NotAPacking,
  NotRegular,
  NotStronglyRegular,
  KindMismatch,
  NoAllOnesRow,
  ParamMismatch,
  NotUnbiased,
  NotType1,
  StructureViolation,
  CertificateMismatch,
  Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace bshm
