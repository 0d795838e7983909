#pragma once

#include <atomic>
#include <memory>
#include <string>

#include "msa/gcode/directives.hpp"
#include "msa/transcript.hpp"

namespace msa::dialogue {

/// Implementations must tolerate concurrent generate() calls.
class LlmClient {
 public:
  virtual ~LlmClient() = default;
  /// Errors: LlmUnavailable, LlmTimeout.
  virtual std::string generate(const gcode::DirectiveString& directives, const Transcript& context) = 0;
};

/// Deterministic echo: "<ECHO directives='D' last='L'>" where L is the last turn's text.
class StubLlmClient final : public LlmClient {
 public:
  std::string generate(const gcode::DirectiveString& directives, const Transcript& context) override;
};

struct RemoteLlmConfig {
  std::string base_url;  // http://host:port
  std::string path = "/v1/generate";
  std::string model;
  std::string token;
  int connect_timeout_ms = 3000;
  int read_timeout_ms = 30000;
  int retries = 2;  // additional attempts after the first
  int retry_backoff_ms = 200;

  /// MSA_LLM_BASE_URL, MSA_LLM_PATH, MSA_LLM_MODEL, MSA_LLM_TOKEN,
  /// MSA_LLM_TIMEOUT_MS, MSA_LLM_RETRIES; unset variables keep defaults.
  static RemoteLlmConfig from_env();
};

/// POSTs {"model", "directives", "messages": [{"role", "speaker", "content"}]}
/// and reads "output" (or "text") from the JSON reply. Bearer auth when a
/// token is set. Only plain http endpoints are supported.
class RemoteLlmClient final : public LlmClient {
 public:
  explicit RemoteLlmClient(RemoteLlmConfig config);
  std::string generate(const gcode::DirectiveString& directives, const Transcript& context) override;

  const RemoteLlmConfig& config() const noexcept { return config_; }
  /// HTTP attempts made over the client's lifetime.
  std::size_t attempts() const noexcept { return attempts_.load(); }

 private:
  RemoteLlmConfig config_;
  std::string host_;
  int port_ = 80;
  std::atomic<std::size_t> attempts_{0};
};

enum class LlmKind { Stub, Remote };

std::unique_ptr<LlmClient> make_llm_client(LlmKind kind, const RemoteLlmConfig& remote = {});

}  // namespace msa::dialogue
