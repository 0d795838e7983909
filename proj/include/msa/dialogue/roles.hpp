#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "msa/transcript.hpp"

namespace msa::dialogue {

/// One keyword rule: the first rule whose phrase (or '?' when interrogative)
/// occurs in the utterance decides its pragmatic role.
struct RoleRule {
  PragmaticRole role = PragmaticRole::InformationProvider;
  std::vector<std::string> phrases;
  bool interrogative = false;
};

struct RolePolicy {
  std::vector<RoleRule> rules;
  PragmaticRole fallback = PragmaticRole::InformationProvider;
  bool case_sensitive = false;

  /// '?' -> CLARIFIER, delegation phrases -> RESPONSIBILITY_DELEGATOR,
  /// first-person commitments -> RESPONSIBILITY_ACCEPTOR, else INFORMATION_PROVIDER.
  static RolePolicy keyword_default();
  /// {"case_sensitive": bool?, "fallback": "ROLE"?, "rules": [{"role", "phrases": [...], "interrogative"?}]}
  static RolePolicy from_json(const nlohmann::json& j);

  PragmaticRole classify(std::string_view utterance) const;
};

struct RoleAssignment {
  TurnRole turn_role = TurnRole::User;
  PragmaticRole function_role = PragmaticRole::InformationProvider;
};

/// Roles for the turn that follows `context`: assistant after a user turn,
/// otherwise user. The function role classifies the final utterance.
RoleAssignment assign_role(const Transcript& context, const RolePolicy& policy = RolePolicy::keyword_default());

enum class TransitionVerdict { Smooth, Flagged };

/// A change of pragmatic role is flagged unless a structural cause is given.
TransitionVerdict monitor_role_transition(PragmaticRole prev, PragmaticRole next,
                                          const std::optional<std::string>& cause = std::nullopt);

std::string_view to_string(TransitionVerdict v) noexcept;

}  // namespace msa::dialogue
