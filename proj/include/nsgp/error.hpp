#pragma once

#include <stdexcept>
#include <string>

namespace nsgp {

/// Machine-readable reason attached to every domain error thrown by the
/// library.  The CLI maps these to exit code 1; InternalInconsistency is
/// reserved for cross-check failures that indicate a bug, not bad input.
enum class ErrorCode {
  EmptyGenerators,
  ZeroGenerator,
  GcdNotOne,
  NotAnElement,
  ZeroArgument,
  NotAPermutation,
  NotCoprime,
  MultiplierNotInPartner,
  NotLSpaceShape,
  QuotientNotIndicator,
  ZeroPolynomial,
  InternalInconsistency,
};

const char* to_string(ErrorCode code);

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

}  // namespace nsgp
