#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace setconc {

/// Machine-readable failure category, surfaced by the CLI as `error.code`.
enum class ErrorCode {
  Input,         // malformed argument (out-of-range mask, element already in set, ...)
  Parse,         // unreadable function file or numeric literal
  Capacity,      // instance too large for the requested exhaustive check
  Domain,        // bound evaluated outside its stated parameter range
  Hypothesis,    // bound hypothesis rejected in strict mode
  Precondition,  // operation precondition not met (carries a witness in the message)
  Internal,      // consistency check failed; indicates a bug
};

std::string_view to_string(ErrorCode code);

/// Exit status used by the CLI for each error category.
int exit_status(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(ErrorCode::Input, what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorCode::Parse, what) {}
};

class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& what) : Error(ErrorCode::Capacity, what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorCode::Domain, what) {}
};

class HypothesisError : public Error {
 public:
  explicit HypothesisError(const std::string& what) : Error(ErrorCode::Hypothesis, what) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(ErrorCode::Precondition, what) {}
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what) : Error(ErrorCode::Internal, what) {}
};

}  // namespace setconc
