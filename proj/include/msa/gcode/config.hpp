#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "msa/gcode/tag.hpp"

namespace msa::gcode {

/// A partial six-dimension pragmatic configuration; at most one tag per dimension.
class SpeakerModuleConfig {
 public:
  SpeakerModuleConfig() = default;

  /// Adds a tag; DuplicateDimension if its dimension is already configured.
  void insert(GCodeTag tag);
  /// Adds or replaces the tag for its dimension.
  void set(GCodeTag tag);
  void erase(Dimension d) { tags_[index_of(d)].reset(); }

  const std::optional<GCodeTag>& get(Dimension d) const { return tags_[index_of(d)]; }
  bool contains(Dimension d) const { return tags_[index_of(d)].has_value(); }
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }

  /// Configured tags in canonical dimension order.
  std::vector<GCodeTag> tags() const;

  std::optional<std::string> speaker_id;

  bool operator==(const SpeakerModuleConfig&) const = default;

 private:
  std::array<std::optional<GCodeTag>, kDimensionCount> tags_;
};

/// Tag-list form, e.g. ["#T_SOFTASSERT", "#P_SELFREF"].
SpeakerModuleConfig parse_tag_list(std::span<const std::string> surfaces,
                                   const VocabularyRegistry& registry = VocabularyRegistry::builtin());

/// Keyed-object form, e.g. {"tone": "SOFTASSERT", "position": "SELFREF"}.
/// An optional "speaker_id" string key is accepted. Errors: MalformedJson,
/// UnknownKey, UnknownValue.
SpeakerModuleConfig parse_config_object(std::string_view json_text,
                                        const VocabularyRegistry& registry = VocabularyRegistry::builtin());
SpeakerModuleConfig parse_config_json(const nlohmann::json& object,
                                      const VocabularyRegistry& registry = VocabularyRegistry::builtin());

/// Accepts either form, as found under a "speaker_module" key.
SpeakerModuleConfig parse_speaker_module(const nlohmann::json& value,
                                         const VocabularyRegistry& registry = VocabularyRegistry::builtin());

/// Tag-list form carries tags only; speaker_id survives the object form.
nlohmann::ordered_json to_tag_list_json(const SpeakerModuleConfig& config);
nlohmann::ordered_json to_object_json(const SpeakerModuleConfig& config);

}  // namespace msa::gcode
