#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "msa/transcript.hpp"

namespace msa::dialogue {

/// Normalized: lowercase, strip ASCII punctuation, split on whitespace.
/// Raw: split on whitespace only (bit-compatible with the reference check).
enum class TokenMode { Normalized, Raw };

inline constexpr double kDefaultDriftThreshold = 0.2;

struct DriftReport {
  std::size_t turn_index = 0;
  double overlap_ratio = 0.0;
  bool drifted = false;
  std::optional<std::string> realignment;
};

/// overlap_ratio = |unique tokens shared with prev| / |tokens of curr|;
/// drifted iff overlap_ratio < threshold.
/// Errors: EmptyUtterance if curr has no tokens, InvalidArgument if threshold
/// is outside [0, 1].
DriftReport detect_drift(std::string_view prev_text, std::string_view curr_text,
                         double threshold = kDefaultDriftThreshold, TokenMode mode = TokenMode::Normalized);

/// Drift check between turns position-1 and position; fills turn_index and,
/// when drifted, the realignment quoting the later (current) turn.
DriftReport detect_turn_drift(const Transcript& transcript, std::size_t position,
                              double threshold = kDefaultDriftThreshold, TokenMode mode = TokenMode::Normalized);

/// "(please confirm first: '<text>')", verbatim, no escaping.
std::string generate_realignment(std::string_view last_user_text);

}  // namespace msa::dialogue
