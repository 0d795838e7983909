#include "msa/dialogue/pipeline.hpp"

#include "msa/error.hpp"
#include "msa/text.hpp"

namespace msa::dialogue {

PipelineResult run_pipeline(const Transcript& context, const gcode::SpeakerModuleConfig& prev_tags, LlmClient& llm,
                            const PipelineConfig& config) {
  if (context.empty()) throw Error(ErrorCode::EmptyContext, "pipeline needs at least one context turn");
  PipelineResult r;

  r.tags = gcode::infer_tags(context, prev_tags, config.inference);
  r.directives = gcode::build_prompt_directives(r.tags);

  r.role = assign_role(context, config.role_policy);
  r.chain = replay_commitments(context, config.patterns);

  if (context.size() >= 2) {
    r.drift = detect_turn_drift(context, context.size() - 1, config.drift_threshold, config.token_mode);
    r.drift_flag = r.drift->drifted;
    if (r.drift_flag) r.directives.append(*r.drift->realignment);
  }

  std::string text = llm.generate(r.directives, context);
  if (text::trim(text).empty()) throw Error(ErrorCode::LlmUnavailable, "LLM returned an empty reply");
  r.reply.speaker = config.reply_speaker.value_or(SpeakerId(std::string(to_string(r.role.turn_role))));
  r.reply.text = std::move(text);
  r.reply.turn_role = r.role.turn_role;
  r.reply.function_role = config.role_policy.classify(r.reply.text);
  r.reply.index = context.back().index + 1;

  r.chain = update_commitments(std::move(r.chain), r.reply, config.patterns);

  Transcript dialog = context;
  dialog.turns.push_back(r.reply);
  r.scorecard = scoring::score_transcript(dialog, config.rubric);
  return r;
}

nlohmann::ordered_json pipeline_result_to_json(const PipelineResult& r) {
  nlohmann::ordered_json j;
  j["reply"] = turn_to_json(r.reply);
  j["turn_role"] = to_string(r.role.turn_role);
  j["function_role"] = to_string(r.role.function_role);
  j["tags"] = gcode::to_object_json(r.tags);
  j["directives"] = r.directives.text;
  auto& chain = j["responsibility_chain"] = nlohmann::ordered_json::array();
  for (const auto& c : r.chain.commitments()) {
    nlohmann::ordered_json cj;
    cj["id"] = c.id;
    cj["holder"] = c.holder.value;
    cj["text"] = c.text;
    cj["status"] = to_string(c.status);
    cj["created_at"] = c.created_at;
    if (c.target) cj["target"] = c.target->value;
    chain.push_back(std::move(cj));
  }
  j["drift_flag"] = r.drift_flag;
  if (r.drift) j["overlap_ratio"] = r.drift->overlap_ratio;
  j["scorecard"] = scoring::scorecard_to_json(r.scorecard);
  return j;
}

}  // namespace msa::dialogue
