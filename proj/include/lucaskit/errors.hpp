#pragma once

#include <stdexcept>
#include <string>

namespace lucaskit {

// Mirrors lk_status in lucaskit.h; the C layer maps one onto the other.
enum class ErrorCode {
  Parameter = 1,
  Domain,
  Range,
  Integrality,
  Certification,
  PrecisionExhausted,
  ReductionFailure,
  Feasibility,
  Parity,
  Usage,
  ScanLimit,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

const char* error_code_name(ErrorCode code) noexcept;

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace lucaskit
