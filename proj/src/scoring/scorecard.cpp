#include "msa/scoring/scorecard.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "msa/error.hpp"

namespace msa::scoring {

Totals totals_of(const SubScores& sub) {
  return {total_metric(sub, Metric::PragmaticConsistency), total_metric(sub, Metric::ResponsibilityChain),
          total_metric(sub, Metric::ContextStability)};
}

CaseScores CaseScores::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::MalformedJson, "case scores must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "case_id" && key != "pragmatic" && key != "responsibility" && key != "context" && key != "roles")
      throw Error(ErrorCode::UnknownKey, "unknown case score key", key);
  }
  CaseScores c;
  c.subscores = SubScores::from_json(j);
  try {
    c.case_id = j.value("case_id", std::string{});
    c.roles = j.value("roles", std::vector<std::string>{});
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedJson, "bad case score file", e.what());
  }
  return c;
}

CaseScores CaseScores::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedJson, "invalid JSON in " + path, e.what());
  }
  return from_json(j);
}

ScoreCard score_case(const CaseScores& c) {
  ScoreCard card;
  card.case_id = c.case_id;
  card.subscores = c.subscores;
  card.totals = totals_of(c.subscores);
  if (c.roles.size() >= 2) card.shift_rate = count_role_shifts(std::span<const std::string>(c.roles));
  return card;
}

ScoreCard score_transcript(const Transcript& transcript, const RubricRuleSet& rules) {
  ScoreCard card;
  const auto ann = auto_annotate(transcript, rules);
  card.source = ScoreSource::Heuristic;
  card.focus = ann.focus;
  card.confidence = ann.confidence;
  card.subscores = ann.scores;
  card.totals = totals_of(ann.scores);

  std::vector<PragmaticRole> roles;
  for (const auto& t : transcript.turns) {
    if (t.speaker != ann.focus || t.turn_role == TurnRole::System) continue;
    roles.push_back(t.function_role.value_or(rules.role_policy.classify(t.text)));
  }
  if (roles.size() >= 2) card.shift_rate = count_role_shifts(std::span<const PragmaticRole>(roles));
  if (!transcript.empty()) card.heuristic = heuristic_score(transcript);
  return card;
}

nlohmann::ordered_json scorecard_to_json(const ScoreCard& card) {
  nlohmann::ordered_json j;
  j["source"] = card.source == ScoreSource::Provided ? "provided" : "heuristic";
  if (!card.case_id.empty()) j["case_id"] = card.case_id;
  if (card.focus) j["focus"] = card.focus->value;
  j["subscores"] = {{"pragmatic", card.subscores.pragmatic},
                    {"responsibility", card.subscores.responsibility},
                    {"context", card.subscores.context}};
  j["totals"] = {{"pragmatic_consistency", card.totals.pragmatic_consistency},
                 {"responsibility_chain", card.totals.responsibility_chain},
                 {"context_stability", card.totals.context_stability}};
  if (card.shift_rate) {
    j["shift_rate"] = {{"shifts", card.shift_rate->shifts},
                       {"pairs", card.shift_rate->pairs},
                       {"value", card.shift_rate->value()},
                       {"percent", card.shift_rate->percent_truncated()}};
  } else {
    j["shift_rate"] = nullptr;
  }
  if (card.confidence) {
    j["confidence"] = {{"pragmatic", (*card.confidence)[0]},
                       {"responsibility", (*card.confidence)[1]},
                       {"context", (*card.confidence)[2]}};
  }
  if (card.heuristic) {
    j["heuristic"] = {{"role_continuity", card.heuristic->role_continuity},
                      {"responsibility_trace", card.heuristic->responsibility_trace},
                      {"context_integrity", card.heuristic->context_integrity}};
  } else {
    j["heuristic"] = nullptr;
  }
  return j;
}

std::string render_table(const ScoreCard& card, const std::string& title) {
  std::ostringstream os;
  if (!title.empty()) os << title << '\n';
  os << std::left << std::setw(24) << "Metric" << std::setw(28) << "Sub-dimensions" << "Total\n";
  os << std::string(58, '-') << '\n';
  const std::array<const char*, 3> names = {"Pragmatic Consistency", "Responsibility Chain", "Context Stability"};
  for (std::size_t m = 0; m < kAllMetrics.size(); ++m) {
    const auto metric = kAllMetrics[m];
    std::ostringstream subs;
    const auto& s = card.subscores.of(metric);
    for (std::size_t i = 0; i < s.size(); ++i)
      subs << (i ? " " : "") << metric_prefix(metric) << i + 1 << '=' << s[i];
    const int total = m == 0 ? card.totals.pragmatic_consistency
                      : m == 1 ? card.totals.responsibility_chain
                               : card.totals.context_stability;
    os << std::setw(24) << names[m] << std::setw(28) << subs.str() << total << "/9\n";
  }
  os << std::setw(52) << "Speaker Role Shift Rate";
  if (card.shift_rate) {
    os << card.shift_rate->percent_truncated() << "% (" << card.shift_rate->shifts << '/' << card.shift_rate->pairs
       << ")\n";
  } else {
    os << "n/a\n";
  }
  if (card.heuristic) {
    os << std::setw(52) << "Heuristic (role/resp/context)" << card.heuristic->role_continuity << '/'
       << card.heuristic->responsibility_trace << '/' << card.heuristic->context_integrity << '\n';
  }
  return os.str();
}

}  // namespace msa::scoring
