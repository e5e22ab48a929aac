#pragma once

#include <stdexcept>
#include <string>

namespace f1k {

enum class ErrorCode {
  out_of_range,
  missing,
  not_connected,
  in_wheel,
  parse_error,
  not_convex,
  bad_dimension,
  empty_shape,
  species_mismatch,
  non_functional,
};

inline const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::out_of_range: return "OutOfRange";
    case ErrorCode::missing: return "Missing";
    case ErrorCode::not_connected: return "NotConnected";
    case ErrorCode::in_wheel: return "InWheel";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::not_convex: return "NotConvex";
    case ErrorCode::bad_dimension: return "BadDimension";
    case ErrorCode::empty_shape: return "EmptyShape";
    case ErrorCode::species_mismatch: return "SpeciesMismatch";
    case ErrorCode::non_functional: return "NonFunctional";
  }
  return "Error";
}

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace f1k
