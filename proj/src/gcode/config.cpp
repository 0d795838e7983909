#include "msa/gcode/config.hpp"

#include "msa/error.hpp"

namespace msa::gcode {

void SpeakerModuleConfig::insert(GCodeTag tag) {
  auto& slot = tags_[index_of(tag.dimension)];
  if (slot)
    throw Error(ErrorCode::DuplicateDimension, "dimension " + std::string(display_name(tag.dimension)) +
                                                   " given twice (" + slot->canonical_surface() + ", " +
                                                   tag.canonical_surface() + ")");
  slot = std::move(tag);
}

void SpeakerModuleConfig::set(GCodeTag tag) { tags_[index_of(tag.dimension)] = std::move(tag); }

std::size_t SpeakerModuleConfig::size() const noexcept {
  std::size_t n = 0;
  for (const auto& t : tags_) n += t.has_value();
  return n;
}

std::vector<GCodeTag> SpeakerModuleConfig::tags() const {
  std::vector<GCodeTag> out;
  for (const auto& t : tags_)
    if (t) out.push_back(*t);
  return out;
}

SpeakerModuleConfig parse_tag_list(std::span<const std::string> surfaces, const VocabularyRegistry& registry) {
  SpeakerModuleConfig config;
  for (const auto& s : surfaces) config.insert(parse_tag(s, registry));
  return config;
}

SpeakerModuleConfig parse_config_object(std::string_view json_text, const VocabularyRegistry& registry) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::MalformedJson, e.what());
  }
  return parse_config_json(j, registry);
}

SpeakerModuleConfig parse_config_json(const nlohmann::json& object, const VocabularyRegistry& registry) {
  if (!object.is_object()) throw Error(ErrorCode::MalformedJson, "speaker module must be a JSON object");
  SpeakerModuleConfig config;
  for (const auto& [key, value] : object.items()) {
    if (key == "speaker_id") {
      if (!value.is_string()) throw Error(ErrorCode::MalformedJson, "speaker_id must be a string");
      config.speaker_id = value.get<std::string>();
      continue;
    }
    auto dim = dimension_from_key(key);
    if (!dim) throw Error(ErrorCode::UnknownKey, "unknown speaker module key '" + key + "'");
    if (!value.is_string())
      throw Error(ErrorCode::MalformedJson, "value for '" + key + "' must be a string");
    // Keys differing only in case collapse onto one dimension.
    config.insert(make_tag(*dim, value.get<std::string>(), registry));
  }
  return config;
}

SpeakerModuleConfig parse_speaker_module(const nlohmann::json& value, const VocabularyRegistry& registry) {
  if (value.is_array()) {
    std::vector<std::string> surfaces;
    for (const auto& v : value) {
      if (!v.is_string()) throw Error(ErrorCode::MalformedJson, "tag list entries must be strings");
      surfaces.push_back(v.get<std::string>());
    }
    return parse_tag_list(surfaces, registry);
  }
  if (value.is_object()) return parse_config_json(value, registry);
  throw Error(ErrorCode::MalformedJson, "speaker_module must be a tag list or a keyed object");
}

nlohmann::ordered_json to_tag_list_json(const SpeakerModuleConfig& config) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& t : config.tags()) out.push_back(t.canonical_surface());
  return out;
}

nlohmann::ordered_json to_object_json(const SpeakerModuleConfig& config) {
  auto out = nlohmann::ordered_json::object();
  for (const auto& t : config.tags()) out[std::string(object_key(t.dimension))] = t.value;
  if (config.speaker_id) out["speaker_id"] = *config.speaker_id;
  return out;
}

}  // namespace msa::gcode
