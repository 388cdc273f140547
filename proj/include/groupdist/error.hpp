#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace groupdist {

enum class ErrorCode {
  // perm
  DegreeMismatch,
  DegreeTooLarge,
  InvalidPermutation,
  // group
  NotClosed,
  NotAssociative,
  NoIdentity,
  NoInverse,
  IndexOutOfRange,
  // embed
  AdjointNotInjective,
  InvalidEmbedding,
  Unsupported,
  // wordmetric
  DoesNotGenerate,
  // ordinal / series
  SeriesTooShort,
  InvalidSample,
  InvalidParameter,
  LengthMismatch,
  GroupMismatch,
  WindowTooLarge,
  UnexpectedDistance,
  // simulate
  Diverged,
  // io
  ParseError,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exit status class used by the command line tool: 2 usage/parse,
/// 3 validation, 4 runtime.
int exit_status(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace groupdist
