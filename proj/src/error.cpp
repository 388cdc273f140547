#include "groupdist/error.hpp"

namespace groupdist {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::AdjointNotInjective: return "AdjointNotInjective";
    case ErrorCode::InvalidEmbedding: return "InvalidEmbedding";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::DoesNotGenerate: return "DoesNotGenerate";
    case ErrorCode::SeriesTooShort: return "SeriesTooShort";
    case ErrorCode::InvalidSample: return "InvalidSample";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::WindowTooLarge: return "WindowTooLarge";
    case ErrorCode::UnexpectedDistance: return "UnexpectedDistance";
    case ErrorCode::Diverged: return "Diverged";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

int exit_status(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidPermutation:
    case ErrorCode::InvalidParameter:
    case ErrorCode::DegreeTooLarge:
    case ErrorCode::Unsupported:
    case ErrorCode::IndexOutOfRange:
      return 2;
    case ErrorCode::NotClosed:
    case ErrorCode::NotAssociative:
    case ErrorCode::NoIdentity:
    case ErrorCode::NoInverse:
    case ErrorCode::AdjointNotInjective:
    case ErrorCode::InvalidEmbedding:
    case ErrorCode::DoesNotGenerate:
      return 3;
    default:
      return 4;
  }
}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, std::string(to_string(code)) + ": " + message);
}

}  // namespace groupdist
