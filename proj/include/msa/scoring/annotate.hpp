#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "msa/dialogue/roles.hpp"
#include "msa/scoring/rubric.hpp"
#include "msa/transcript.hpp"

namespace msa::scoring {

/// Phrase lists and cut-offs for the keyword annotator. Phrases match
/// case-insensitively as substrings.
struct RubricRuleSet {
  std::vector<std::string> tone_flip_markers;    // P1
  std::vector<std::string> register_blur_markers;  // P4
  std::vector<std::string> attribution_phrases;  // R1
  std::vector<std::string> continuity_phrases;   // R2
  std::vector<std::string> transfer_phrases;     // R3, legitimate
  std::vector<std::string> evasive_phrases;      // R3, evasive
  std::vector<std::string> closure_phrases;      // R4
  std::vector<std::string> mirroring_phrases;    // C2
  std::vector<std::string> repair_phrases;       // C3
  std::size_t fragment_min_tokens = 4;           // P3
  dialogue::RolePolicy role_policy = dialogue::RolePolicy::keyword_default();  // P2

  static RubricRuleSet defaults();
  /// Overrides individual lists of defaults(); unknown keys are rejected.
  static RubricRuleSet from_json(const nlohmann::json& j);
};

struct Annotation {
  SubScores scores;
  /// Indexed like the sub-scores: [metric][sub-dimension], each in [0, 1].
  std::array<std::array<double, 4>, 3> confidence{};
  SpeakerId focus;
};

/// Heuristic sub-scores for `focus` (default: first user-role speaker, else
/// the first speaker). Advisory only; not a substitute for human annotation.
Annotation auto_annotate(const Transcript& transcript, const RubricRuleSet& rules = RubricRuleSet::defaults(),
                         const std::optional<SpeakerId>& focus = std::nullopt);

/// Focus-speaker selection used by auto_annotate.
std::optional<SpeakerId> default_focus(const Transcript& transcript);

}  // namespace msa::scoring
