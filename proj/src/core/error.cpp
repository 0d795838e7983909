#include "msa/error.hpp"

namespace msa {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UnknownPrefix: return "UnknownPrefix";
    case ErrorCode::UnknownValue: return "UnknownValue";
    case ErrorCode::MalformedToken: return "MalformedToken";
    case ErrorCode::DuplicateDimension: return "DuplicateDimension";
    case ErrorCode::UnknownKey: return "UnknownKey";
    case ErrorCode::MalformedJson: return "MalformedJson";
    case ErrorCode::MalformedRegistry: return "MalformedRegistry";
    case ErrorCode::EmptyContext: return "EmptyContext";
    case ErrorCode::UnknownSpeaker: return "UnknownSpeaker";
    case ErrorCode::EmptyUtterance: return "EmptyUtterance";
    case ErrorCode::InvalidTransition: return "InvalidTransition";
    case ErrorCode::MalformedTranscript: return "MalformedTranscript";
    case ErrorCode::LlmUnavailable: return "LlmUnavailable";
    case ErrorCode::LlmTimeout: return "LlmTimeout";
    case ErrorCode::RangeViolation: return "RangeViolation";
    case ErrorCode::TooFewTurns: return "TooFewTurns";
    case ErrorCode::DegenerateVariance: return "DegenerateVariance";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::CorruptFixture: return "CorruptFixture";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

bool is_validation_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::LlmUnavailable:
    case ErrorCode::LlmTimeout:
    case ErrorCode::CorruptFixture:
    case ErrorCode::Io:
    case ErrorCode::MalformedRegistry:
      return false;
    default:
      return true;
  }
}

}  // namespace msa
