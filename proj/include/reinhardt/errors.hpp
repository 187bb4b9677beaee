#ifndef REINHARDT_ERRORS_HPP
#define REINHARDT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace reinhardt {

enum class ErrorKind {
  InvalidExponent,
  NotRationalType,
  DomainViolation,
  DimensionMismatch,
  NotInDomain,
  SigmaZero,
  PreconditionViolation,
  SamplingExhausted,
  ParseError,
};

/// All library errors carry a kind so callers (the CLI in particular) can map
/// them to stable exit codes without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace reinhardt

#endif  // REINHARDT_ERRORS_HPP
