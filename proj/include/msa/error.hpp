#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace msa {

enum class ErrorCode {
  // gcode
  UnknownPrefix,
  UnknownValue,
  MalformedToken,
  DuplicateDimension,
  UnknownKey,
  MalformedJson,
  MalformedRegistry,
  EmptyContext,
  // logic
  UnknownSpeaker,
  // dialogue
  EmptyUtterance,
  InvalidTransition,
  MalformedTranscript,
  LlmUnavailable,
  LlmTimeout,
  // scoring
  RangeViolation,
  TooFewTurns,
  DegenerateVariance,
  InvalidArgument,
  // interface
  CorruptFixture,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

/// True for codes that describe bad input rather than an environment failure.
/// The CLI maps these to exit status 2 and the service to HTTP 4xx.
bool is_validation_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::string detail = {})
      : std::runtime_error(std::move(message)), code_(code), detail_(std::move(detail)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace msa
