#pragma once

#include <stdexcept>
#include <string>

namespace lhemb {

enum class ErrorCode {
  DuplicateLabel,
  UnknownEndpoint,
  LoopForbidden,
  UnknownVertex,
  TooLarge,
  InvalidScheme,
  Disconnected,
  HasLoops,
  GraphMismatch,
  NotGenusZero,
  NotACycle,
  PreconditionViolated,
  EdgeCountMismatch,
  NotLocallyHamiltonian,
  ReconstructionFailed,
  NonSimpleVertex,
  RangeTooLarge,
  BadAttachmentVertex,
  ParseError,
  ValidationError,
};

const char* error_code_name(ErrorCode c);

/// Process exit code associated with an error class (documented in the README).
int error_exit_code(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lhemb
