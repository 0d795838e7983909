#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "msa/gcode/config.hpp"
#include "msa/transcript.hpp"

namespace msa::gcode {

enum class InferencePredicate {
  ContainsChar,  // final turn text contains `arg`
  EndsWith,      // final turn text, trimmed, ends with `arg`
};

struct InferenceRule {
  InferencePredicate predicate = InferencePredicate::ContainsChar;
  std::string arg;
  GCodeTag override_tag;

  bool matches(std::string_view text) const;
};

/// Ordered rule list. Rules fire in order; a later rule overrides an earlier
/// one on the same dimension.
///
/// File format (JSON array):
///   [{"predicate": "contains_char" | "ends_with", "arg": "?",
///     "dimension": "tone", "value": "NEUTRAL"}]
struct InferenceRuleSet {
  std::vector<InferenceRule> rules;

  static InferenceRuleSet from_json(std::string_view json_text,
                                    const VocabularyRegistry& registry = VocabularyRegistry::builtin());
  static InferenceRuleSet load(const std::string& path,
                               const VocabularyRegistry& registry = VocabularyRegistry::builtin());

  /// The shipped rule: a '?' in the final turn sets TONE to `interrogative_tone`.
  static InferenceRuleSet defaults(std::string_view interrogative_tone = "NEUTRAL",
                                   const VocabularyRegistry& registry = VocabularyRegistry::builtin());
};

/// Returns `prev` with every firing rule's tag applied. Never removes a
/// dimension. Errors: EmptyContext.
SpeakerModuleConfig infer_tags(const Transcript& context, SpeakerModuleConfig prev,
                               const InferenceRuleSet& rules = InferenceRuleSet::defaults());

}  // namespace msa::gcode
