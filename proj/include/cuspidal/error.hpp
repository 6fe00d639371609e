#pragma once

#include <stdexcept>
#include <string>

namespace cuspidal {

enum class ErrorCode {
  invalid_argument,
  parse_error,
  context_mismatch,
  dimension_mismatch,
  division_by_zero,
  infinite_dimensional,
  not_certified,
  step_limit_exceeded,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace cuspidal
