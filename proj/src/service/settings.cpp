#include "msa/service/settings.hpp"

#include <fstream>

#include <json.hpp>

#include "msa/error.hpp"

extern char** environ;

namespace msa::service {

namespace {

int to_int(const std::string& name, const std::string& value) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(value, &used);
    if (used == value.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::InvalidArgument, name + " must be an integer", value);
}

template <typename T>
void pick(std::optional<T>& dst, const std::optional<T>& a, const std::optional<T>& b, const std::optional<T>& c) {
  if (a) dst = a;
  else if (b) dst = b;
  else if (c) dst = c;
}

}  // namespace

std::map<std::string, std::string> process_env() {
  std::map<std::string, std::string> env;
  for (char** e = environ; e && *e; ++e) {
    std::string kv(*e);
    if (auto eq = kv.find('='); eq != std::string::npos) env.emplace(kv.substr(0, eq), kv.substr(eq + 1));
  }
  return env;
}

SettingsLayer layer_from_env(const std::map<std::string, std::string>& env) {
  SettingsLayer l;
  auto str = [&](const char* name, std::optional<std::string>& dst) {
    if (auto it = env.find(name); it != env.end() && !it->second.empty()) dst = it->second;
  };
  auto num = [&](const char* name, std::optional<int>& dst) {
    if (auto it = env.find(name); it != env.end() && !it->second.empty()) dst = to_int(name, it->second);
  };
  str("MSA_HOST", l.host);
  num("MSA_PORT", l.port);
  str("MSA_LLM", l.llm);
  str("MSA_LLM_BASE_URL", l.llm_base_url);
  str("MSA_LLM_MODEL", l.llm_model);
  str("MSA_LLM_TOKEN", l.llm_token);
  num("MSA_LLM_TIMEOUT_MS", l.llm_timeout_ms);
  num("MSA_LLM_RETRIES", l.llm_retries);
  str("MSA_OUTPUT_DIR", l.output_dir);
  str("MSA_RUBRIC_RULES", l.rubric_rules);
  str("MSA_INFERENCE_RULES", l.inference_rules);
  return l;
}

SettingsLayer layer_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open config file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedJson, "invalid JSON in " + path, e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::MalformedJson, "config file must hold a JSON object", path);
  SettingsLayer l;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "host") l.host = value.get<std::string>();
      else if (key == "port") l.port = value.get<int>();
      else if (key == "llm") l.llm = value.get<std::string>();
      else if (key == "llm_base_url") l.llm_base_url = value.get<std::string>();
      else if (key == "llm_model") l.llm_model = value.get<std::string>();
      else if (key == "llm_token") l.llm_token = value.get<std::string>();
      else if (key == "llm_timeout_ms") l.llm_timeout_ms = value.get<int>();
      else if (key == "llm_retries") l.llm_retries = value.get<int>();
      else if (key == "output_dir") l.output_dir = value.get<std::string>();
      else if (key == "rubric_rules") l.rubric_rules = value.get<std::string>();
      else if (key == "inference_rules") l.inference_rules = value.get<std::string>();
      else throw Error(ErrorCode::UnknownKey, "unknown config key", key);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedJson, "bad value in " + path, e.what());
  }
  return l;
}

Settings resolve_settings(const SettingsLayer& cli, const SettingsLayer& env, const SettingsLayer& file) {
  SettingsLayer m;
  pick(m.host, cli.host, env.host, file.host);
  pick(m.port, cli.port, env.port, file.port);
  pick(m.llm, cli.llm, env.llm, file.llm);
  pick(m.llm_base_url, cli.llm_base_url, env.llm_base_url, file.llm_base_url);
  pick(m.llm_model, cli.llm_model, env.llm_model, file.llm_model);
  pick(m.llm_token, cli.llm_token, env.llm_token, file.llm_token);
  pick(m.llm_timeout_ms, cli.llm_timeout_ms, env.llm_timeout_ms, file.llm_timeout_ms);
  pick(m.llm_retries, cli.llm_retries, env.llm_retries, file.llm_retries);
  pick(m.output_dir, cli.output_dir, env.output_dir, file.output_dir);
  pick(m.rubric_rules, cli.rubric_rules, env.rubric_rules, file.rubric_rules);
  pick(m.inference_rules, cli.inference_rules, env.inference_rules, file.inference_rules);

  Settings s;
  if (m.host) s.host = *m.host;
  if (m.port) {
    if (*m.port < 0 || *m.port > 65535) throw Error(ErrorCode::InvalidArgument, "port out of range");
    s.port = *m.port;
  }
  if (m.llm) {
    if (*m.llm == "stub") s.llm = dialogue::LlmKind::Stub;
    else if (*m.llm == "remote") s.llm = dialogue::LlmKind::Remote;
    else throw Error(ErrorCode::InvalidArgument, "llm must be 'stub' or 'remote'", *m.llm);
  }
  if (m.llm_base_url) s.remote.base_url = *m.llm_base_url;
  if (m.llm_model) s.remote.model = *m.llm_model;
  if (m.llm_token) s.remote.token = *m.llm_token;
  if (m.llm_timeout_ms) s.remote.read_timeout_ms = *m.llm_timeout_ms;
  if (m.llm_retries) s.remote.retries = *m.llm_retries;
  if (m.output_dir) s.output_dir = *m.output_dir;
  s.rubric_rules = m.rubric_rules;
  s.inference_rules = m.inference_rules;
  return s;
}

}  // namespace msa::service
