#include "msa/gcode/dimension.hpp"

#include "msa/text.hpp"

namespace msa::gcode {

namespace {

struct DimensionNames {
  std::string_view prefix;
  std::string_view key;
  std::string_view display;
};

constexpr std::array<DimensionNames, kDimensionCount> kNames = {{
    {"T", "tone", "TONE"},
    {"P", "position", "POSITION"},
    {"C", "closure", "CLOSURE"},
    {"CTX", "context_alignment", "CONTEXT_ALIGNMENT"},
    {"L", "logical_flow", "LOGICAL_FLOW"},
    {"E", "affective_tension", "AFFECTIVE_TENSION"},
}};

}  // namespace

std::string_view tag_prefix(Dimension d) noexcept { return kNames[index_of(d)].prefix; }
std::string_view object_key(Dimension d) noexcept { return kNames[index_of(d)].key; }
std::string_view display_name(Dimension d) noexcept { return kNames[index_of(d)].display; }

std::optional<Dimension> dimension_from_prefix(std::string_view prefix) {
  auto upper = text::to_upper(prefix);
  for (auto d : kAllDimensions)
    if (kNames[index_of(d)].prefix == upper) return d;
  return std::nullopt;
}

std::optional<Dimension> dimension_from_key(std::string_view key) {
  auto lower = text::to_lower(key);
  for (auto d : kAllDimensions)
    if (kNames[index_of(d)].key == lower) return d;
  return std::nullopt;
}

}  // namespace msa::gcode
