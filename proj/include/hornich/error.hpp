#pragma once

#include <stdexcept>
#include <string>

namespace hornich {

enum class ErrorCode {
  LeadingZeroDivisor,
  NotUnitConstant,
  NotZeroConstant,
  OutsideDisk,
  Overflow,
  SingularPoint,
  UnknownName,
  BadParam,
  ParseError,
  UnknownTheorem,
  BadProfile,
};

const char* to_string(ErrorCode code);

// Numerical aborts (overflow, singularities, domain violations of the series
// substrate) as opposed to bad user input.
bool is_numerical(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hornich
