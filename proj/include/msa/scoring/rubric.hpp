#pragma once

#include <array>
#include <string_view>

#include <json.hpp>

namespace msa::scoring {

enum class Metric { PragmaticConsistency, ResponsibilityChain, ContextStability };

inline constexpr std::array<Metric, 3> kAllMetrics = {Metric::PragmaticConsistency, Metric::ResponsibilityChain,
                                                     Metric::ContextStability};

/// Upper bound of each sub-dimension (P1..P4, R1..R4, C1..C4 share the shape).
inline constexpr std::array<int, 4> kSubScoreMax = {2, 2, 2, 3};

std::string_view to_string(Metric m) noexcept;
/// Sub-dimension label, e.g. ("R", 3) -> "R3".
std::string_view metric_prefix(Metric m) noexcept;

/// Integer sub-scores for the three 9-point metrics.
/// JSON form: {"pragmatic": [p1,p2,p3,p4], "responsibility": [...], "context": [...]}.
struct SubScores {
  std::array<int, 4> pragmatic{};
  std::array<int, 4> responsibility{};
  std::array<int, 4> context{};

  const std::array<int, 4>& of(Metric m) const;
  std::array<int, 4>& of(Metric m);

  /// Throws RangeViolation on any out-of-range component.
  void validate() const;

  static SubScores from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  bool operator==(const SubScores&) const = default;
};

/// Sum of the four sub-dimensions of `which`, 0..9. Errors: RangeViolation.
int total_metric(const SubScores& sub, Metric which);

/// Total-score guide bands: 9, 6-8, <=5.
enum class ScoreBand { Full, Mostly, Weak };
ScoreBand band_of(int total);
std::string_view to_string(ScoreBand band) noexcept;

}  // namespace msa::scoring
