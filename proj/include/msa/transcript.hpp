#pragma once

#include <compare>
#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace msa {

/// Speaker identity. Compared by exact string equality.
struct SpeakerId {
  std::string value;

  SpeakerId() = default;
  explicit SpeakerId(std::string v) : value(std::move(v)) {}

  auto operator<=>(const SpeakerId&) const = default;
};

enum class TurnRole { User, Assistant, System };

/// Pragmatic function of an utterance. Closed set.
enum class PragmaticRole {
  InformationProvider,
  ContextConfirmer,
  ResponsibilityAcceptor,
  ResponsibilityDelegator,
  Clarifier,
  ConceptualBuilder,
  Challenger,
  Evader,
};

std::string_view to_string(TurnRole role) noexcept;
std::string_view to_string(PragmaticRole role) noexcept;
TurnRole parse_turn_role(std::string_view s);
PragmaticRole parse_pragmatic_role(std::string_view s);

struct DialogueTurn {
  SpeakerId speaker;
  std::string text;
  TurnRole turn_role = TurnRole::User;
  std::optional<PragmaticRole> function_role;
  std::size_t index = 0;

  bool operator==(const DialogueTurn&) const = default;
};

struct Transcript {
  std::vector<DialogueTurn> turns;
  std::map<std::string, std::string> metadata;

  bool empty() const noexcept { return turns.empty(); }
  std::size_t size() const noexcept { return turns.size(); }
  const DialogueTurn& back() const { return turns.back(); }

  /// Appends a turn, assigning the next consecutive index.
  DialogueTurn& append(SpeakerId speaker, std::string text, TurnRole role,
                       std::optional<PragmaticRole> function_role = std::nullopt);

  /// Throws MalformedTranscript if any turn has empty text or indices are not consecutive.
  void validate() const;

  bool operator==(const Transcript&) const = default;
};

nlohmann::json turn_to_json(const DialogueTurn& turn);
DialogueTurn turn_from_json(const nlohmann::json& j, std::size_t default_index);

/// JSONL transcript: one turn object per line. A line holding only a
/// "metadata" object sets transcript metadata. Blank lines are skipped.
Transcript read_transcript_jsonl(std::istream& in);
Transcript parse_transcript_jsonl(std::string_view text);
Transcript load_transcript_jsonl(const std::string& path);
void write_transcript_jsonl(std::ostream& out, const Transcript& transcript);
std::string transcript_to_jsonl(const Transcript& transcript);

/// Accepts {"turns": [...], "metadata"?: {...}} or a bare array of turns.
Transcript transcript_from_json(const nlohmann::json& j);

}  // namespace msa
