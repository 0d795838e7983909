#pragma once

#include <string>
#include <string_view>

#include "msa/gcode/config.hpp"

namespace msa::gcode {

/// Space-joined "[KEY=VALUE]" segments handed to the language model.
struct DirectiveString {
  std::string text;

  /// Appends a segment separated by a single space.
  void append(std::string_view segment);

  bool operator==(const DirectiveString&) const = default;
};

/// One "[KEY=VALUE]" segment per configured dimension in canonical order,
/// e.g. "[TONE=SOFTASSERT] [POSITION=SELFREF]". Empty config yields "".
DirectiveString build_prompt_directives(const SpeakerModuleConfig& config);

}  // namespace msa::gcode
