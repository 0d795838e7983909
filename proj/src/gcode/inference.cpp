#include "msa/gcode/inference.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "msa/error.hpp"
#include "msa/text.hpp"

namespace msa::gcode {

bool InferenceRule::matches(std::string_view text) const {
  switch (predicate) {
    case InferencePredicate::ContainsChar: return text::contains(text, arg);
    case InferencePredicate::EndsWith: return text::ends_with(text::trim(text), arg);
  }
  return false;
}

InferenceRuleSet InferenceRuleSet::from_json(std::string_view json_text, const VocabularyRegistry& registry) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::MalformedJson, std::string("inference rules: ") + e.what());
  }
  if (!doc.is_array()) throw Error(ErrorCode::MalformedJson, "inference rules must be a JSON array");
  InferenceRuleSet set;
  for (const auto& r : doc) {
    if (!r.is_object()) throw Error(ErrorCode::MalformedJson, "inference rule must be an object");
    for (const auto& [key, _] : r.items())
      if (key != "predicate" && key != "arg" && key != "dimension" && key != "value")
        throw Error(ErrorCode::UnknownKey, "unknown inference rule key '" + key + "'");
    auto str = [&](const char* key) {
      if (!r.contains(key) || !r[key].is_string())
        throw Error(ErrorCode::MalformedJson, std::string("inference rule needs string '") + key + "'");
      return r[key].get<std::string>();
    };
    InferenceRule rule;
    auto pred = str("predicate");
    if (pred == "contains_char") {
      rule.predicate = InferencePredicate::ContainsChar;
    } else if (pred == "ends_with") {
      rule.predicate = InferencePredicate::EndsWith;
    } else {
      throw Error(ErrorCode::UnknownValue, "unknown inference predicate '" + pred + "'");
    }
    rule.arg = str("arg");
    if (rule.arg.empty()) throw Error(ErrorCode::MalformedJson, "inference rule 'arg' must be non-empty");
    auto dim_key = str("dimension");
    auto dim = dimension_from_key(dim_key);
    if (!dim) throw Error(ErrorCode::UnknownKey, "unknown dimension '" + dim_key + "'");
    rule.override_tag = make_tag(*dim, str("value"), registry);
    set.rules.push_back(std::move(rule));
  }
  return set;
}

InferenceRuleSet InferenceRuleSet::load(const std::string& path, const VocabularyRegistry& registry) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open inference rules '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str(), registry);
}

InferenceRuleSet InferenceRuleSet::defaults(std::string_view interrogative_tone, const VocabularyRegistry& registry) {
  InferenceRuleSet set;
  set.rules.push_back(
      InferenceRule{InferencePredicate::ContainsChar, "?", make_tag(Dimension::Tone, interrogative_tone, registry)});
  return set;
}

SpeakerModuleConfig infer_tags(const Transcript& context, SpeakerModuleConfig prev, const InferenceRuleSet& rules) {
  if (context.empty()) throw Error(ErrorCode::EmptyContext, "tag inference needs at least one turn");
  const auto& last = context.back().text;
  for (const auto& rule : rules.rules)
    if (rule.matches(last)) prev.set(rule.override_tag);
  return prev;
}

}  // namespace msa::gcode
