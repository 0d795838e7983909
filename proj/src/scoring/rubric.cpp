#include "msa/scoring/rubric.hpp"

#include <string>

#include "msa/error.hpp"

namespace msa::scoring {

std::string_view to_string(Metric m) noexcept {
  switch (m) {
    case Metric::PragmaticConsistency: return "pragmatic_consistency";
    case Metric::ResponsibilityChain: return "responsibility_chain";
    case Metric::ContextStability: return "context_stability";
  }
  return "";
}

std::string_view metric_prefix(Metric m) noexcept {
  switch (m) {
    case Metric::PragmaticConsistency: return "P";
    case Metric::ResponsibilityChain: return "R";
    case Metric::ContextStability: return "C";
  }
  return "";
}

const std::array<int, 4>& SubScores::of(Metric m) const {
  switch (m) {
    case Metric::PragmaticConsistency: return pragmatic;
    case Metric::ResponsibilityChain: return responsibility;
    case Metric::ContextStability: return context;
  }
  return pragmatic;
}

std::array<int, 4>& SubScores::of(Metric m) {
  return const_cast<std::array<int, 4>&>(static_cast<const SubScores&>(*this).of(m));
}

void SubScores::validate() const {
  for (auto m : kAllMetrics) {
    const auto& s = of(m);
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 0 || s[i] > kSubScoreMax[i])
        throw Error(ErrorCode::RangeViolation, std::string(metric_prefix(m)) + std::to_string(i + 1) + " = " +
                                                   std::to_string(s[i]) + " outside 0.." +
                                                   std::to_string(kSubScoreMax[i]));
    }
  }
}

SubScores SubScores::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::MalformedJson, "sub-scores must be a JSON object");
  SubScores s;
  const std::array<std::pair<const char*, Metric>, 3> keys = {{{"pragmatic", Metric::PragmaticConsistency},
                                                               {"responsibility", Metric::ResponsibilityChain},
                                                               {"context", Metric::ContextStability}}};
  for (const auto& [key, metric] : keys) {
    if (!j.contains(key) || !j[key].is_array() || j[key].size() != 4)
      throw Error(ErrorCode::MalformedJson, std::string("sub-scores need a 4-element '") + key + "' array");
    for (std::size_t i = 0; i < 4; ++i) {
      if (!j[key][i].is_number_integer())
        throw Error(ErrorCode::MalformedJson, std::string("sub-score '") + key + "' entries must be integers");
      s.of(metric)[i] = j[key][i].get<int>();
    }
  }
  s.validate();
  return s;
}

nlohmann::json SubScores::to_json() const {
  return {{"pragmatic", pragmatic}, {"responsibility", responsibility}, {"context", context}};
}

int total_metric(const SubScores& sub, Metric which) {
  sub.validate();
  int total = 0;
  for (int v : sub.of(which)) total += v;
  return total;
}

ScoreBand band_of(int total) {
  if (total < 0 || total > 9) throw Error(ErrorCode::RangeViolation, "metric total outside 0..9");
  if (total == 9) return ScoreBand::Full;
  if (total >= 6) return ScoreBand::Mostly;
  return ScoreBand::Weak;
}

std::string_view to_string(ScoreBand band) noexcept {
  switch (band) {
    case ScoreBand::Full: return "9";
    case ScoreBand::Mostly: return "6-8";
    case ScoreBand::Weak: return "<=5";
  }
  return "";
}

}  // namespace msa::scoring
