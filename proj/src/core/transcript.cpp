#include "msa/transcript.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include "msa/error.hpp"
#include "msa/text.hpp"

namespace msa {

namespace {

constexpr std::array<std::pair<PragmaticRole, std::string_view>, 8> kPragmaticNames = {{
    {PragmaticRole::InformationProvider, "INFORMATION_PROVIDER"},
    {PragmaticRole::ContextConfirmer, "CONTEXT_CONFIRMER"},
    {PragmaticRole::ResponsibilityAcceptor, "RESPONSIBILITY_ACCEPTOR"},
    {PragmaticRole::ResponsibilityDelegator, "RESPONSIBILITY_DELEGATOR"},
    {PragmaticRole::Clarifier, "CLARIFIER"},
    {PragmaticRole::ConceptualBuilder, "CONCEPTUAL_BUILDER"},
    {PragmaticRole::Challenger, "CHALLENGER"},
    {PragmaticRole::Evader, "EVADER"},
}};

}  // namespace

std::string_view to_string(TurnRole role) noexcept {
  switch (role) {
    case TurnRole::User: return "user";
    case TurnRole::Assistant: return "assistant";
    case TurnRole::System: return "system";
  }
  return "user";
}

std::string_view to_string(PragmaticRole role) noexcept {
  for (const auto& [r, name] : kPragmaticNames)
    if (r == role) return name;
  return "INFORMATION_PROVIDER";
}

TurnRole parse_turn_role(std::string_view s) {
  auto lower = text::to_lower(text::trim(s));
  if (lower == "user") return TurnRole::User;
  if (lower == "assistant") return TurnRole::Assistant;
  if (lower == "system") return TurnRole::System;
  throw Error(ErrorCode::MalformedTranscript, "unknown turn_role '" + std::string(s) + "'");
}

PragmaticRole parse_pragmatic_role(std::string_view s) {
  auto upper = text::to_upper(text::trim(s));
  for (const auto& [r, name] : kPragmaticNames)
    if (name == upper) return r;
  throw Error(ErrorCode::MalformedTranscript, "unknown function_role '" + std::string(s) + "'");
}

DialogueTurn& Transcript::append(SpeakerId speaker, std::string text, TurnRole role,
                                 std::optional<PragmaticRole> function_role) {
  std::size_t index = turns.empty() ? 0 : turns.back().index + 1;
  turns.push_back(DialogueTurn{std::move(speaker), std::move(text), role, function_role, index});
  return turns.back();
}

void Transcript::validate() const {
  for (std::size_t i = 0; i < turns.size(); ++i) {
    const auto& t = turns[i];
    if (t.speaker.value.empty())
      throw Error(ErrorCode::MalformedTranscript, "turn " + std::to_string(i) + " has an empty speaker");
    if (t.text.empty())
      throw Error(ErrorCode::MalformedTranscript, "turn " + std::to_string(i) + " has empty text");
    if (i > 0 && t.index != turns[i - 1].index + 1)
      throw Error(ErrorCode::MalformedTranscript,
                  "turn indices must be consecutive (got " + std::to_string(turns[i - 1].index) + " then " +
                      std::to_string(t.index) + ")");
  }
}

nlohmann::json turn_to_json(const DialogueTurn& turn) {
  nlohmann::json out = nlohmann::json::object();
  out["speaker"] = turn.speaker.value;
  out["text"] = turn.text;
  out["turn_role"] = std::string(to_string(turn.turn_role));
  if (turn.function_role) out["function_role"] = std::string(to_string(*turn.function_role));
  out["index"] = turn.index;
  return out;
}

DialogueTurn turn_from_json(const nlohmann::json& j, std::size_t default_index) {
  if (!j.is_object()) throw Error(ErrorCode::MalformedTranscript, "turn must be a JSON object");
  DialogueTurn t;
  try {
    t.speaker = SpeakerId(j.at("speaker").get<std::string>());
    t.text = j.at("text").get<std::string>();
    t.turn_role = j.contains("turn_role") ? parse_turn_role(j.at("turn_role").get<std::string>()) : TurnRole::User;
    if (j.contains("function_role") && !j.at("function_role").is_null())
      t.function_role = parse_pragmatic_role(j.at("function_role").get<std::string>());
    t.index = j.contains("index") ? j.at("index").get<std::size_t>() : default_index;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedTranscript, std::string("bad turn object: ") + e.what());
  }
  return t;
}

Transcript read_transcript_jsonl(std::istream& in) {
  Transcript tr;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorCode::MalformedJson, "line " + std::to_string(line_no) + ": " + e.what());
    }
    if (j.is_object() && j.size() == 1 && j.contains("metadata")) {
      for (const auto& [k, v] : j["metadata"].items())
        tr.metadata[k] = v.is_string() ? v.get<std::string>() : v.dump();
      continue;
    }
    tr.turns.push_back(turn_from_json(j, tr.turns.size()));
  }
  tr.validate();
  return tr;
}

Transcript parse_transcript_jsonl(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_transcript_jsonl(in);
}

Transcript load_transcript_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open transcript '" + path + "'");
  return read_transcript_jsonl(in);
}

void write_transcript_jsonl(std::ostream& out, const Transcript& transcript) {
  if (!transcript.metadata.empty()) {
    nlohmann::json meta = {{"metadata", transcript.metadata}};
    out << meta.dump() << '\n';
  }
  for (const auto& t : transcript.turns) out << turn_to_json(t).dump() << '\n';
}

std::string transcript_to_jsonl(const Transcript& transcript) {
  std::ostringstream out;
  write_transcript_jsonl(out, transcript);
  return out.str();
}

Transcript transcript_from_json(const nlohmann::json& j) {
  Transcript tr;
  const nlohmann::json* turns = nullptr;
  if (j.is_array()) {
    turns = &j;
  } else if (j.is_object() && j.contains("turns") && j["turns"].is_array()) {
    turns = &j["turns"];
    if (j.contains("metadata"))
      for (const auto& [k, v] : j["metadata"].items())
        tr.metadata[k] = v.is_string() ? v.get<std::string>() : v.dump();
  } else {
    throw Error(ErrorCode::MalformedTranscript, "expected an array of turns or an object with \"turns\"");
  }
  for (const auto& t : *turns) tr.turns.push_back(turn_from_json(t, tr.turns.size()));
  tr.validate();
  return tr;
}

}  // namespace msa
