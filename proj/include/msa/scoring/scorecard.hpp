#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "msa/scoring/annotate.hpp"
#include "msa/scoring/heuristic.hpp"
#include "msa/scoring/rubric.hpp"
#include "msa/scoring/shift_rate.hpp"

namespace msa::scoring {

struct Totals {
  int pragmatic_consistency = 0;
  int responsibility_chain = 0;
  int context_stability = 0;

  bool operator==(const Totals&) const = default;
};

Totals totals_of(const SubScores& sub);

enum class ScoreSource { Provided, Heuristic };

struct ScoreCard {
  ScoreSource source = ScoreSource::Provided;
  std::string case_id;  // provided scores only
  std::optional<SpeakerId> focus;  // heuristic scores only
  std::optional<std::array<std::array<double, 4>, 3>> confidence;  // heuristic scores only
  SubScores subscores;
  Totals totals;
  std::optional<ShiftRate> shift_rate;  // absent when fewer than two role observations
  std::optional<HeuristicScores> heuristic;
};

/// Sub-scores supplied by an annotator, with that annotator's role labels.
/// File form: {"case_id"?, "pragmatic": [...], "responsibility": [...],
/// "context": [...], "roles"?: ["label", ...]}.
struct CaseScores {
  std::string case_id;
  SubScores subscores;
  std::vector<std::string> roles;

  static CaseScores from_json(const nlohmann::json& j);
  static CaseScores load(const std::string& path);
};

/// Deterministic scorecard from provided sub-scores.
ScoreCard score_case(const CaseScores& c);

/// Heuristic scorecard from raw text: auto_annotate sub-scores, shift rate over
/// the focus speaker's function roles, and the reference heuristic mapping.
ScoreCard score_transcript(const Transcript& transcript, const RubricRuleSet& rules = RubricRuleSet::defaults());

nlohmann::ordered_json scorecard_to_json(const ScoreCard& card);

/// Plain-text table laid out as Metric | Sub-dimension scores | Total.
std::string render_table(const ScoreCard& card, const std::string& title = "");

}  // namespace msa::scoring
