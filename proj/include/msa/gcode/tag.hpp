#pragma once

#include <string>
#include <string_view>

#include "msa/gcode/dimension.hpp"
#include "msa/gcode/registry.hpp"

namespace msa::gcode {

struct GCodeTag {
  Dimension dimension = Dimension::Tone;
  std::string value;  // canonical upper case

  /// "#<PREFIX>_<VALUE>", e.g. "#CTX_MERGE".
  std::string canonical_surface() const;

  bool operator==(const GCodeTag&) const = default;
};

/// Parses one tag surface such as "#T_SOFTASSERT". Input is case-insensitive
/// and may carry surrounding whitespace.
/// Errors: MalformedToken, UnknownPrefix, UnknownValue.
GCodeTag parse_tag(std::string_view surface,
                   const VocabularyRegistry& registry = VocabularyRegistry::builtin());

/// Validates a bare value (as used in the keyed-object form) for a dimension.
GCodeTag make_tag(Dimension dimension, std::string_view value,
                  const VocabularyRegistry& registry = VocabularyRegistry::builtin());

}  // namespace msa::gcode
