#include "msa/service/api.hpp"

#include <fstream>

#include "msa/gcode/inference.hpp"
#include "msa/logic/graph.hpp"
#include "msa/logic/loops.hpp"
#include "msa/scoring/scorecard.hpp"
#include "msa/text.hpp"

namespace msa::service {

GenerateRequest GenerateRequest::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::MalformedJson, "request body must be a JSON object");
  for (const auto& [key, value] : j.items())
    if (key != "prompt" && key != "speaker_module") throw Error(ErrorCode::UnknownKey, "unknown request key", key);
  if (!j.contains("prompt") || !j["prompt"].is_string())
    throw Error(ErrorCode::MalformedJson, "'prompt' must be a string");
  if (!j.contains("speaker_module")) throw Error(ErrorCode::MalformedJson, "'speaker_module' is required");

  GenerateRequest r;
  r.prompt = j["prompt"].get<std::string>();
  if (text::trim(r.prompt).empty()) throw Error(ErrorCode::MalformedJson, "'prompt' must be non-empty");
  r.speaker_module = gcode::parse_speaker_module(j["speaker_module"]);
  r.form = j["speaker_module"].is_array() ? Form::List : Form::Object;
  return r;
}

nlohmann::ordered_json GenerateRequest::to_json() const {
  nlohmann::ordered_json j;
  j["prompt"] = prompt;
  j["speaker_module"] = form == Form::List ? gcode::to_tag_list_json(speaker_module)
                                           : gcode::to_object_json(speaker_module);
  return j;
}

GenerateResponse GenerateResponse::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("output") || !j["output"].is_string())
    throw Error(ErrorCode::MalformedJson, "response must be {\"output\": string}");
  for (const auto& [key, value] : j.items())
    if (key != "output") throw Error(ErrorCode::UnknownKey, "unknown response key", key);
  return {j["output"].get<std::string>()};
}

nlohmann::ordered_json GenerateResponse::to_json() const {
  nlohmann::ordered_json j;
  j["output"] = output;
  return j;
}

Engine Engine::from_settings(const Settings& settings) {
  Engine e;
  if (settings.rubric_rules) {
    std::ifstream in(*settings.rubric_rules);
    if (!in) throw Error(ErrorCode::Io, "cannot open rubric rules " + *settings.rubric_rules);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& ex) {
      throw Error(ErrorCode::MalformedJson, "invalid JSON in " + *settings.rubric_rules, ex.what());
    }
    e.pipeline.rubric = scoring::RubricRuleSet::from_json(j);
  }
  if (settings.inference_rules) e.pipeline.inference = gcode::InferenceRuleSet::load(*settings.inference_rules);
  e.llm = dialogue::make_llm_client(settings.llm, settings.remote);
  return e;
}

GenerateResponse generate(const GenerateRequest& request, const Engine& engine) {
  Transcript context;
  context.append(SpeakerId("user"), request.prompt, TurnRole::User);
  const auto result = dialogue::run_pipeline(context, request.speaker_module, *engine.llm, engine.pipeline);
  return {result.reply.text};
}

Transcript parse_transcript_any(std::string_view body) {
  const auto trimmed = text::trim(body);
  if (trimmed.empty()) throw Error(ErrorCode::MalformedTranscript, "empty transcript body");
  // A whole-document array or {"turns": ...} object; anything else is JSONL.
  auto doc = nlohmann::json::parse(trimmed, nullptr, false);
  if (!doc.is_discarded() && (doc.is_array() || (doc.is_object() && doc.contains("turns"))))
    return transcript_from_json(doc);
  return parse_transcript_jsonl(body);
}

std::string annotate_document(std::string_view body, const scoring::RubricRuleSet& rules) {
  const auto transcript = parse_transcript_any(body);
  if (transcript.empty()) throw Error(ErrorCode::MalformedTranscript, "transcript has no turns");
  return scoring::scorecard_to_json(scoring::score_transcript(transcript, rules)).dump(2) + "\n";
}

std::string analyze_graph_document(std::string_view body) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(body);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedJson, "graph body is not valid JSON", e.what());
  }
  const auto graph = logic::graph_from_json(j);
  const auto report = logic::detect_closed_loops(graph);

  auto names = [](const std::vector<SpeakerId>& ids) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& id : ids) a.push_back(id.value);
    return a;
  };
  nlohmann::ordered_json out;
  out["mode"] = report.mode == logic::LoopReport::Mode::Exhaustive ? "exhaustive" : "component_summary";
  out["loops"] = nlohmann::ordered_json::array();
  for (const auto& loop : report.loops) out["loops"].push_back(names(loop));
  out["cyclic_components"] = nlohmann::ordered_json::array();
  for (const auto& comp : report.cyclic_components) out["cyclic_components"].push_back(names(comp));
  out["drift_nodes"] = names(logic::detect_partial_drift(graph));
  out["closure"] = nlohmann::ordered_json::array();
  for (const auto& [a, b] : logic::transitive_closure(graph)) out["closure"].push_back({a.value, b.value});
  return out.dump(2) + "\n";
}

nlohmann::ordered_json error_body(const Error& e) {
  nlohmann::ordered_json j;
  j["code"] = to_string(e.code());
  j["message"] = e.what();
  if (!e.detail().empty()) j["detail"] = e.detail();
  return j;
}

}  // namespace msa::service
