#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "msa/dialogue/llm_client.hpp"
#include "msa/dialogue/pipeline.hpp"
#include "msa/gcode/config.hpp"

namespace msa::dialogue {

/// Speaker profiles plus a task statement.
/// JSON: {"task": "...", "task_id"?: "...", "<speaker>": <speaker module>, ...};
/// every key other than task/task_id names a speaker.
struct MultiSpeakerTask {
  std::string task_id;
  std::string task;
  std::vector<std::pair<std::string, gcode::SpeakerModuleConfig>> speakers;  // sorted by name

  /// Errors: MalformedJson, UnknownValue, DuplicateDimension, InvalidArgument (< 2 speakers or empty task).
  static MultiSpeakerTask from_json(const nlohmann::json& j);
  static MultiSpeakerTask load(const std::string& path);
  nlohmann::ordered_json to_json() const;
};

/// Runs `turns` pipeline steps after an opening system turn carrying the task.
/// Speakers take turns round-robin from a seed-chosen starting speaker. The
/// result is a pure function of (task, turns, seed, config) for a
/// deterministic client.
Transcript simulate_dialogue(const MultiSpeakerTask& task, std::size_t turns, std::uint64_t seed, LlmClient& llm,
                             const PipelineConfig& config = {});

}  // namespace msa::dialogue
