#include "msa/dialogue/simulate.hpp"

#include <fstream>
#include <random>

#include "msa/error.hpp"
#include "msa/text.hpp"

namespace msa::dialogue {

MultiSpeakerTask MultiSpeakerTask::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::MalformedJson, "task file must be a JSON object");
  MultiSpeakerTask t;
  for (const auto& [key, value] : j.items()) {
    if (key == "task" || key == "task_id") {
      if (!value.is_string()) throw Error(ErrorCode::MalformedJson, "'" + key + "' must be a string");
      (key == "task" ? t.task : t.task_id) = value.get<std::string>();
      continue;
    }
    if (text::trim(key).empty()) throw Error(ErrorCode::InvalidArgument, "speaker names must be non-empty");
    auto cfg = gcode::parse_speaker_module(value);
    cfg.speaker_id = key;
    t.speakers.emplace_back(key, std::move(cfg));
  }
  if (text::trim(t.task).empty()) throw Error(ErrorCode::InvalidArgument, "task statement is missing");
  if (t.speakers.size() < 2) throw Error(ErrorCode::InvalidArgument, "a multi-speaker task needs at least 2 speakers");
  if (t.task_id.empty()) t.task_id = "task";
  return t;
}

MultiSpeakerTask MultiSpeakerTask::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedJson, "invalid JSON in " + path, e.what());
  }
  return from_json(j);
}

nlohmann::ordered_json MultiSpeakerTask::to_json() const {
  nlohmann::ordered_json j;
  for (const auto& [name, cfg] : speakers) {
    auto obj = gcode::to_object_json(cfg);
    obj.erase("speaker_id");
    j[name] = obj;
  }
  j["task"] = task;
  j["task_id"] = task_id;
  return j;
}

Transcript simulate_dialogue(const MultiSpeakerTask& task, std::size_t turns, std::uint64_t seed, LlmClient& llm,
                             const PipelineConfig& config) {
  if (task.speakers.size() < 2) throw Error(ErrorCode::InvalidArgument, "a multi-speaker task needs at least 2 speakers");
  std::mt19937_64 rng(seed);
  std::size_t next = static_cast<std::size_t>(rng() % task.speakers.size());

  Transcript t;
  t.metadata["task_id"] = task.task_id;
  t.metadata["seed"] = std::to_string(seed);
  t.append(SpeakerId("system"), task.task, TurnRole::System);

  for (std::size_t i = 0; i < turns; ++i) {
    const auto& [name, profile] = task.speakers[next];
    PipelineConfig step = config;
    step.reply_speaker = SpeakerId(name);
    auto result = run_pipeline(t, profile, llm, step);
    t.turns.push_back(std::move(result.reply));
    next = (next + 1) % task.speakers.size();
  }
  return t;
}

}  // namespace msa::dialogue
