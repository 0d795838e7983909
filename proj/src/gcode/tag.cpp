#include "msa/gcode/tag.hpp"

#include <algorithm>
#include <cctype>

#include "msa/error.hpp"
#include "msa/text.hpp"

namespace msa::gcode {

std::string GCodeTag::canonical_surface() const {
  return "#" + std::string(tag_prefix(dimension)) + "_" + value;
}

GCodeTag make_tag(Dimension dimension, std::string_view value, const VocabularyRegistry& registry) {
  auto canonical = text::to_upper(text::trim(value));
  if (!registry.contains(dimension, canonical))
    throw Error(ErrorCode::UnknownValue,
                "'" + std::string(value) + "' is not a registered " + std::string(object_key(dimension)) + " value");
  return GCodeTag{dimension, std::move(canonical)};
}

GCodeTag parse_tag(std::string_view surface, const VocabularyRegistry& registry) {
  auto token = text::trim(surface);
  if (token.empty() || token.front() != '#')
    throw Error(ErrorCode::MalformedToken, "tag '" + std::string(surface) + "' must start with '#'");
  token.remove_prefix(1);
  if (std::any_of(token.begin(), token.end(), [](unsigned char c) { return std::isspace(c) != 0; }))
    throw Error(ErrorCode::MalformedToken, "tag '" + std::string(surface) + "' is not a single token");
  auto sep = token.find('_');
  if (sep == std::string_view::npos || sep == 0 || sep + 1 == token.size())
    throw Error(ErrorCode::MalformedToken, "tag '" + std::string(surface) + "' must look like #<PREFIX>_<VALUE>");
  auto prefix = token.substr(0, sep);
  auto dim = dimension_from_prefix(prefix);
  if (!dim) throw Error(ErrorCode::UnknownPrefix, "unknown tag prefix '" + std::string(prefix) + "'");
  return make_tag(*dim, token.substr(sep + 1), registry);
}

}  // namespace msa::gcode
