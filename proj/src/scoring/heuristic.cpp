#include "msa/scoring/heuristic.hpp"

#include <algorithm>

#include "msa/text.hpp"

namespace msa::scoring {

const std::vector<std::string>& default_heuristic_patterns() {
  static const std::vector<std::string> patterns = {"I will", "should", "will"};
  return patterns;
}

HeuristicScores heuristic_score(const Transcript& dialog, const std::vector<std::string>& patterns) {
  const auto& turns = dialog.turns;
  bool alternates = true;
  for (std::size_t i = 0; i + 1 < turns.size(); ++i) alternates = alternates && turns[i].speaker != turns[i + 1].speaker;

  int commits = 0;
  int drifts = 0;
  for (const auto& t : turns) {
    commits += std::any_of(patterns.begin(), patterns.end(), [&](const auto& p) { return text::contains(t.text, p); });
    drifts += text::split_whitespace(t.text).size() < 3;
  }

  HeuristicScores s;
  s.role_continuity = alternates ? 9 : 5;
  s.responsibility_trace = commits >= 3 ? 9 : commits == 2 ? 7 : 5;
  s.context_integrity = std::max(1, 9 - 2 * drifts);
  return s;
}

}  // namespace msa::scoring
