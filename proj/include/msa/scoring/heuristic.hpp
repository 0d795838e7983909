#pragma once

#include <string>
#include <vector>

#include "msa/transcript.hpp"

namespace msa::scoring {

/// The reference 1-9 heuristic mapping.
struct HeuristicScores {
  int role_continuity = 0;       // 9 if speakers alternate on every pair, else 5
  int responsibility_trace = 0;  // 9 if >= 3 committing turns, 7 if exactly 2, else 5
  int context_integrity = 0;     // max(1, 9 - 2 * short_turns), short = fewer than 3 tokens

  bool operator==(const HeuristicScores&) const = default;
};

/// {"I will", "should", "will"}, matched case-sensitively as raw substrings.
const std::vector<std::string>& default_heuristic_patterns();

HeuristicScores heuristic_score(const Transcript& dialog,
                                const std::vector<std::string>& patterns = default_heuristic_patterns());

}  // namespace msa::scoring
