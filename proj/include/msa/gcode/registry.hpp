#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "msa/gcode/dimension.hpp"

namespace msa::gcode {

/// Closed, versioned tag vocabulary: the permitted values for each dimension.
///
/// The registry file is UTF-8 JSON:
///   {"version": 1, "dimensions": [{"dimension": "tone", "values": ["NEUTRAL", ...]}, ...]}
/// Every one of the six dimensions must appear exactly once with a non-empty
/// list of distinct upper-case letter-only values. Anything else is rejected
/// with MalformedRegistry.
class VocabularyRegistry {
 public:
  static VocabularyRegistry from_json(std::string_view json_text);
  static VocabularyRegistry load(const std::string& path);

  /// The registry shipped with the engine (data/registry.json, embedded).
  static const VocabularyRegistry& builtin();

  int version() const noexcept { return version_; }
  bool contains(Dimension d, std::string_view canonical_value) const;
  std::span<const std::string> values(Dimension d) const { return values_[index_of(d)]; }
  std::size_t size() const noexcept;

 private:
  int version_ = 0;
  std::array<std::vector<std::string>, kDimensionCount> values_;
};

}  // namespace msa::gcode
