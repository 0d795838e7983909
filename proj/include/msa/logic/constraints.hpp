#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "msa/transcript.hpp"

namespace msa::logic {

/// Closed predicate set for the contextual constraint phi(utterance, context).
enum class PredicateKind {
  KeywordPresence,      // at least one keyword occurs in the utterance
  KeywordAbsence,       // no keyword occurs in the utterance
  MaxNewTokenRatio,     // share of tokens unseen in the context window <= max_ratio
  TopicAnchorPresence,  // anchor occurs in the utterance or the context window
};

enum class Severity { Warn, Violation };

std::string_view to_string(PredicateKind kind) noexcept;
std::string_view to_string(Severity severity) noexcept;

/// A declarative rule. Keyword and anchor matching is case-insensitive
/// substring matching. `window` is the number of preceding turns forming the
/// context; 0 means "all preceding turns" for MaxNewTokenRatio and "no
/// preceding turns" for TopicAnchorPresence.
struct ContextRule {
  std::string rule_id;
  PredicateKind kind = PredicateKind::KeywordPresence;
  std::vector<std::string> keywords;
  std::string anchor;
  double max_ratio = 1.0;
  std::size_t window = 0;
  Severity severity = Severity::Violation;
};

struct RuleFinding {
  std::string rule_id;
  std::size_t utterance_index = 0;
  Severity severity = Severity::Violation;

  bool operator==(const RuleFinding&) const = default;
};

struct ConstraintReport {
  /// Failed checks ordered by (utterance_index, rule position).
  std::vector<RuleFinding> findings;
  /// Predicate evaluations performed; always turns * rules.
  std::uint64_t evaluations = 0;
};

ConstraintReport check_context_constraints(const Transcript& transcript, std::span<const ContextRule> rules);

/// Rules file: JSON array of
///   {"rule_id", "predicate": "keyword_presence" | "keyword_absence" |
///    "max_new_token_ratio" | "topic_anchor_presence", "keywords"?, "anchor"?,
///    "max_ratio"?, "window"?, "severity": "warn" | "violation"}
std::vector<ContextRule> rules_from_json(const nlohmann::json& j);
std::vector<ContextRule> load_rules(const std::string& path);
nlohmann::json findings_to_json(const ConstraintReport& report);

}  // namespace msa::logic
