#include "msa/gcode/directives.hpp"

namespace msa::gcode {

void DirectiveString::append(std::string_view segment) {
  if (segment.empty()) return;
  if (!text.empty()) text.push_back(' ');
  text.append(segment);
}

DirectiveString build_prompt_directives(const SpeakerModuleConfig& config) {
  DirectiveString out;
  for (const auto& tag : config.tags())
    out.append("[" + std::string(display_name(tag.dimension)) + "=" + tag.value + "]");
  return out;
}

}  // namespace msa::gcode
