#pragma once

#include <map>
#include <optional>
#include <string>

#include "msa/dialogue/llm_client.hpp"

namespace msa::service {

/// One configuration source. Unset fields fall through to the next layer.
struct SettingsLayer {
  std::optional<std::string> host;
  std::optional<int> port;
  std::optional<std::string> llm;  // "stub" or "remote"
  std::optional<std::string> llm_base_url;
  std::optional<std::string> llm_model;
  std::optional<std::string> llm_token;
  std::optional<int> llm_timeout_ms;
  std::optional<int> llm_retries;
  std::optional<std::string> output_dir;
  std::optional<std::string> rubric_rules;     // path to a RubricRuleSet JSON
  std::optional<std::string> inference_rules;  // path to an InferenceRuleSet JSON
};

struct Settings {
  std::string host = "127.0.0.1";
  int port = 8080;
  dialogue::LlmKind llm = dialogue::LlmKind::Stub;
  dialogue::RemoteLlmConfig remote;
  std::string output_dir = "output";
  std::optional<std::string> rubric_rules;
  std::optional<std::string> inference_rules;
};

/// MSA_HOST, MSA_PORT, MSA_LLM, MSA_LLM_BASE_URL, MSA_LLM_MODEL, MSA_LLM_TOKEN,
/// MSA_LLM_TIMEOUT_MS, MSA_LLM_RETRIES, MSA_OUTPUT_DIR, MSA_RUBRIC_RULES,
/// MSA_INFERENCE_RULES. Errors: InvalidArgument on non-numeric values.
SettingsLayer layer_from_env(const std::map<std::string, std::string>& env);
std::map<std::string, std::string> process_env();

/// JSON object keyed by the SettingsLayer field names. Errors: Io,
/// MalformedJson, UnknownKey.
SettingsLayer layer_from_file(const std::string& path);

/// Precedence: cli > env > file > built-in default.
/// Errors: InvalidArgument for an unknown llm kind or an out-of-range port.
Settings resolve_settings(const SettingsLayer& cli, const SettingsLayer& env, const SettingsLayer& file);

}  // namespace msa::service
