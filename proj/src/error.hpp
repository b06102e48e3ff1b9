#pragma once

#include <stdexcept>
#include <string>

namespace haptex {

// Error categories mirrored one-to-one by the C API status codes.
enum class ErrorCode {
  invalid_arg,  // precondition violated by the caller
  io,           // file could not be opened/read/written
  parse,        // malformed file contents
  empty,        // degenerate input (no sweeps, empty spectrum, ...)
  numeric,      // optimizer failure, unstable estimate, ...
  data,         // inconsistent dataset (key mismatch, rank deficiency, ...)
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace haptex
