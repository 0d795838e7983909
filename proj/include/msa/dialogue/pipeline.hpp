#pragma once

#include <optional>

#include <json.hpp>

#include "msa/dialogue/commitments.hpp"
#include "msa/dialogue/drift.hpp"
#include "msa/dialogue/llm_client.hpp"
#include "msa/dialogue/roles.hpp"
#include "msa/gcode/config.hpp"
#include "msa/gcode/directives.hpp"
#include "msa/gcode/inference.hpp"
#include "msa/scoring/scorecard.hpp"

namespace msa::dialogue {

struct PipelineConfig {
  gcode::InferenceRuleSet inference = gcode::InferenceRuleSet::defaults();
  RolePolicy role_policy = RolePolicy::keyword_default();
  PatternSet patterns;
  double drift_threshold = kDefaultDriftThreshold;
  TokenMode token_mode = TokenMode::Normalized;
  scoring::RubricRuleSet rubric = scoring::RubricRuleSet::defaults();
  /// Speaker id of the reply; defaults to the turn-role name ("user"/"assistant").
  std::optional<SpeakerId> reply_speaker;
};

struct PipelineResult {
  DialogueTurn reply;
  RoleAssignment role;
  gcode::SpeakerModuleConfig tags;
  gcode::DirectiveString directives;
  ChainState chain;
  bool drift_flag = false;
  std::optional<DriftReport> drift;
  scoring::ScoreCard scorecard;
};

/// One turn of the runtime: infer tags and compile directives, assign roles,
/// replay commitments, check drift on the last two turns (appending the
/// realignment to the directives), generate the reply, ingest it, and score
/// the extended transcript.
/// Errors: EmptyContext; LlmUnavailable / LlmTimeout from the client.
PipelineResult run_pipeline(const Transcript& context, const gcode::SpeakerModuleConfig& prev_tags, LlmClient& llm,
                            const PipelineConfig& config = {});

nlohmann::ordered_json pipeline_result_to_json(const PipelineResult& result);

}  // namespace msa::dialogue
