#pragma once

#include <memory>
#include <string>
#include <string_view>

#include <json.hpp>

#include "msa/dialogue/llm_client.hpp"
#include "msa/dialogue/pipeline.hpp"
#include "msa/error.hpp"
#include "msa/gcode/config.hpp"
#include "msa/scoring/annotate.hpp"
#include "msa/service/settings.hpp"

namespace msa::service {

/// Body of POST /generate_with_speaker_module. speaker_module may be a tag list
/// or a keyed object; the form is remembered so the body serializes back as sent.
struct GenerateRequest {
  enum class Form { List, Object };

  std::string prompt;
  gcode::SpeakerModuleConfig speaker_module;
  Form form = Form::Object;

  /// Errors: MalformedJson, UnknownKey, plus any speaker-module parse error.
  static GenerateRequest from_json(const nlohmann::json& j);
  nlohmann::ordered_json to_json() const;
};

struct GenerateResponse {
  std::string output;

  static GenerateResponse from_json(const nlohmann::json& j);
  nlohmann::ordered_json to_json() const;
};

/// Everything a request needs, built once at startup and read-only afterwards.
struct Engine {
  dialogue::PipelineConfig pipeline;
  std::shared_ptr<dialogue::LlmClient> llm;

  /// Loads rule files named in `settings` and builds the configured client.
  static Engine from_settings(const Settings& settings);
};

/// Runs one pipeline step on a single-turn context holding the prompt.
GenerateResponse generate(const GenerateRequest& request, const Engine& engine);

/// A JSON array of turns, {"turns": [...]} or JSONL. Errors: MalformedJson,
/// MalformedTranscript.
Transcript parse_transcript_any(std::string_view body);

/// Heuristic scorecard for a transcript body, pretty-printed with a trailing
/// newline. Shared by the CLI and POST /annotate so both emit identical bytes.
std::string annotate_document(std::string_view body, const scoring::RubricRuleSet& rules);

/// {"mode", "loops", "cyclic_components", "drift_nodes", "closure"} for a graph
/// JSON body, pretty-printed with a trailing newline.
std::string analyze_graph_document(std::string_view body);

/// {"code", "message", "detail"?}
nlohmann::ordered_json error_body(const Error& e);

}  // namespace msa::service
