#include "msa/gcode/registry.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "msa/error.hpp"

namespace msa::gcode {

namespace detail {
extern const std::string_view kBuiltinRegistryJson;
}

namespace {

[[noreturn]] void malformed(const std::string& why) {
  throw Error(ErrorCode::MalformedRegistry, "malformed vocabulary registry: " + why);
}

bool is_upper_word(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= 'A' && c <= 'Z'; });
}

}  // namespace

VocabularyRegistry VocabularyRegistry::from_json(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    malformed(e.what());
  }
  if (!doc.is_object()) malformed("top level must be an object");
  for (const auto& [key, _] : doc.items())
    if (key != "version" && key != "dimensions") malformed("unexpected key '" + key + "'");
  if (!doc.contains("version") || !doc["version"].is_number_integer()) malformed("missing integer 'version'");
  if (!doc.contains("dimensions") || !doc["dimensions"].is_array()) malformed("missing 'dimensions' array");

  VocabularyRegistry reg;
  reg.version_ = doc["version"].get<int>();
  std::array<bool, kDimensionCount> seen{};
  for (const auto& entry : doc["dimensions"]) {
    if (!entry.is_object() || !entry.contains("dimension") || !entry["dimension"].is_string() ||
        !entry.contains("values") || !entry["values"].is_array())
      malformed("each dimension entry needs 'dimension' and 'values'");
    auto name = entry["dimension"].get<std::string>();
    auto dim = dimension_from_key(name);
    if (!dim) malformed("unknown dimension '" + name + "'");
    if (seen[index_of(*dim)]) malformed("dimension '" + name + "' listed twice");
    seen[index_of(*dim)] = true;
    auto& values = reg.values_[index_of(*dim)];
    for (const auto& v : entry["values"]) {
      if (!v.is_string() || !is_upper_word(v.get<std::string>()))
        malformed("values for '" + name + "' must be upper-case letter-only strings");
      auto value = v.get<std::string>();
      if (std::find(values.begin(), values.end(), value) != values.end())
        malformed("duplicate value '" + value + "' in '" + name + "'");
      values.push_back(std::move(value));
    }
    if (values.empty()) malformed("dimension '" + name + "' has no values");
  }
  for (auto d : kAllDimensions)
    if (!seen[index_of(d)]) malformed("dimension '" + std::string(object_key(d)) + "' missing");
  return reg;
}

VocabularyRegistry VocabularyRegistry::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

const VocabularyRegistry& VocabularyRegistry::builtin() {
  static const VocabularyRegistry reg = from_json(detail::kBuiltinRegistryJson);
  return reg;
}

bool VocabularyRegistry::contains(Dimension d, std::string_view canonical_value) const {
  const auto& vs = values_[index_of(d)];
  return std::find(vs.begin(), vs.end(), canonical_value) != vs.end();
}

std::size_t VocabularyRegistry::size() const noexcept {
  std::size_t n = 0;
  for (const auto& vs : values_) n += vs.size();
  return n;
}

}  // namespace msa::gcode
