#include "msa/dialogue/roles.hpp"

#include <algorithm>

#include "msa/error.hpp"
#include "msa/text.hpp"

namespace msa::dialogue {

RolePolicy RolePolicy::keyword_default() {
  RolePolicy p;
  p.rules.push_back({PragmaticRole::Clarifier, {}, true});
  p.rules.push_back({PragmaticRole::ResponsibilityDelegator,
                     {"leave that to", "leave it to", "over to you", "up to you", "your call", "you should",
                      "you need to", "you must", "can you", "could you", "please"},
                     false});
  p.rules.push_back({PragmaticRole::ResponsibilityAcceptor,
                     {"i will", "i'll", "i shall", "i promise", "i commit", "i take responsibility",
                      "i'm responsible", "i am responsible", "let me handle", "i can handle"},
                     false});
  return p;
}

RolePolicy RolePolicy::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::MalformedJson, "role policy must be an object");
  RolePolicy p;
  for (const auto& [key, value] : j.items()) {
    if (key != "case_sensitive" && key != "fallback" && key != "rules")
      throw Error(ErrorCode::UnknownKey, "unknown role policy key", key);
  }
  try {
    p.case_sensitive = j.value("case_sensitive", false);
    if (j.contains("fallback")) p.fallback = parse_pragmatic_role(j.at("fallback").get<std::string>());
    for (const auto& r : j.at("rules")) {
      RoleRule rule;
      rule.role = parse_pragmatic_role(r.at("role").get<std::string>());
      rule.phrases = r.value("phrases", std::vector<std::string>{});
      rule.interrogative = r.value("interrogative", false);
      p.rules.push_back(std::move(rule));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedJson, "bad role policy", e.what());
  }
  return p;
}

PragmaticRole RolePolicy::classify(std::string_view utterance) const {
  for (const auto& rule : rules) {
    if (rule.interrogative && text::contains(utterance, "?")) return rule.role;
    for (const auto& phrase : rule.phrases)
      if (text::contains_phrase(utterance, phrase, case_sensitive)) return rule.role;
  }
  return fallback;
}

RoleAssignment assign_role(const Transcript& context, const RolePolicy& policy) {
  RoleAssignment a;
  const bool last_was_user = !context.turns.empty() && context.turns.back().turn_role == TurnRole::User;
  a.turn_role = last_was_user ? TurnRole::Assistant : TurnRole::User;
  a.function_role = context.turns.empty() ? policy.fallback : policy.classify(context.turns.back().text);
  return a;
}

TransitionVerdict monitor_role_transition(PragmaticRole prev, PragmaticRole next,
                                          const std::optional<std::string>& cause) {
  if (prev == next) return TransitionVerdict::Smooth;
  const bool has_cause = cause.has_value() && !text::trim(*cause).empty();
  return has_cause ? TransitionVerdict::Smooth : TransitionVerdict::Flagged;
}

std::string_view to_string(TransitionVerdict v) noexcept {
  return v == TransitionVerdict::Smooth ? "smooth" : "flagged";
}

}  // namespace msa::dialogue
