#include "msa/dialogue/llm_client.hpp"

#include <chrono>
#include <cstdlib>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "msa/error.hpp"

namespace msa::dialogue {

std::string StubLlmClient::generate(const gcode::DirectiveString& directives, const Transcript& context) {
  const std::string last = context.empty() ? std::string() : context.back().text;
  return "<ECHO directives='" + directives.text + "' last='" + last + "'>";
}

namespace {

int env_int(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    return std::stoi(v);
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidArgument, std::string(name) + " must be an integer", v);
  }
}

std::string env_str(const char* name, std::string fallback) {
  const char* v = std::getenv(name);
  return v && *v ? std::string(v) : fallback;
}

}  // namespace

RemoteLlmConfig RemoteLlmConfig::from_env() {
  RemoteLlmConfig c;
  c.base_url = env_str("MSA_LLM_BASE_URL", c.base_url);
  c.path = env_str("MSA_LLM_PATH", c.path);
  c.model = env_str("MSA_LLM_MODEL", c.model);
  c.token = env_str("MSA_LLM_TOKEN", c.token);
  c.read_timeout_ms = env_int("MSA_LLM_TIMEOUT_MS", c.read_timeout_ms);
  c.retries = env_int("MSA_LLM_RETRIES", c.retries);
  return c;
}

RemoteLlmClient::RemoteLlmClient(RemoteLlmConfig config) : config_(std::move(config)) {
  std::string_view url = config_.base_url;
  constexpr std::string_view scheme = "http://";
  if (url.substr(0, scheme.size()) != scheme)
    throw Error(ErrorCode::InvalidArgument, "LLM base URL must start with http://", config_.base_url);
  url.remove_prefix(scheme.size());
  if (auto slash = url.find('/'); slash != std::string_view::npos) url = url.substr(0, slash);
  if (auto colon = url.rfind(':'); colon != std::string_view::npos) {
    try {
      port_ = std::stoi(std::string(url.substr(colon + 1)));
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "bad port in LLM base URL", config_.base_url);
    }
    url = url.substr(0, colon);
  }
  if (url.empty()) throw Error(ErrorCode::InvalidArgument, "LLM base URL has no host", config_.base_url);
  host_ = std::string(url);
  if (config_.retries < 0) config_.retries = 0;
}

std::string RemoteLlmClient::generate(const gcode::DirectiveString& directives, const Transcript& context) {
  nlohmann::json body;
  body["model"] = config_.model;
  body["directives"] = directives.text;
  body["messages"] = nlohmann::json::array();
  for (const auto& t : context.turns)
    body["messages"].push_back({{"role", to_string(t.turn_role)}, {"speaker", t.speaker.value}, {"content", t.text}});
  const std::string payload = body.dump();

  httplib::Client cli(host_, port_);
  cli.set_connection_timeout(std::chrono::milliseconds(config_.connect_timeout_ms));
  cli.set_read_timeout(std::chrono::milliseconds(config_.read_timeout_ms));
  cli.set_write_timeout(std::chrono::milliseconds(config_.read_timeout_ms));
  if (!config_.token.empty()) cli.set_bearer_token_auth(config_.token);

  bool timed_out = false;
  std::string last_error;
  for (int attempt = 0; attempt <= config_.retries; ++attempt) {
    if (attempt > 0) std::this_thread::sleep_for(std::chrono::milliseconds(config_.retry_backoff_ms * attempt));
    ++attempts_;
    const auto started = std::chrono::steady_clock::now();
    auto res = cli.Post(config_.path, payload, "application/json");
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started).count();
    if (!res) {
      const auto err = res.error();
      timed_out = err == httplib::Error::ConnectionTimeout ||
                  (err == httplib::Error::Read && elapsed >= config_.read_timeout_ms);
      last_error = httplib::to_string(err);
      continue;
    }
    timed_out = false;
    if (res->status >= 500) {
      last_error = "HTTP " + std::to_string(res->status);
      continue;
    }
    if (res->status != 200)
      throw Error(ErrorCode::LlmUnavailable, "LLM endpoint rejected the request",
                  "HTTP " + std::to_string(res->status));
    try {
      const auto j = nlohmann::json::parse(res->body);
      if (j.contains("output") && j["output"].is_string()) return j["output"].get<std::string>();
      if (j.contains("text") && j["text"].is_string()) return j["text"].get<std::string>();
    } catch (const nlohmann::json::exception&) {
    }
    throw Error(ErrorCode::LlmUnavailable, "LLM reply has no output text");
  }
  if (timed_out) throw Error(ErrorCode::LlmTimeout, "LLM request timed out", last_error);
  throw Error(ErrorCode::LlmUnavailable, "LLM endpoint unavailable after " + std::to_string(config_.retries + 1) +
                                             " attempts",
              last_error);
}

std::unique_ptr<LlmClient> make_llm_client(LlmKind kind, const RemoteLlmConfig& remote) {
  if (kind == LlmKind::Stub) return std::make_unique<StubLlmClient>();
  return std::make_unique<RemoteLlmClient>(remote);
}

}  // namespace msa::dialogue
