#include "msa/dialogue/drift.hpp"

#include <unordered_set>

#include "msa/error.hpp"
#include "msa/text.hpp"

namespace msa::dialogue {

namespace {

std::vector<std::string> tokenize(std::string_view s, TokenMode mode) {
  return mode == TokenMode::Raw ? text::split_whitespace(s) : text::normalized_tokens(s);
}

}  // namespace

DriftReport detect_drift(std::string_view prev_text, std::string_view curr_text, double threshold, TokenMode mode) {
  if (!(threshold >= 0.0 && threshold <= 1.0))
    throw Error(ErrorCode::InvalidArgument, "drift threshold must be within [0, 1]");
  const auto curr = tokenize(curr_text, mode);
  if (curr.empty()) throw Error(ErrorCode::EmptyUtterance, "current utterance has no tokens");
  const auto prev = tokenize(prev_text, mode);

  const std::unordered_set<std::string> a(prev.begin(), prev.end());
  const std::unordered_set<std::string> b(curr.begin(), curr.end());
  std::size_t shared = 0;
  for (const auto& t : b) shared += a.count(t);

  DriftReport r;
  r.overlap_ratio = static_cast<double>(shared) / static_cast<double>(curr.size());
  r.drifted = r.overlap_ratio < threshold;
  return r;
}

DriftReport detect_turn_drift(const Transcript& transcript, std::size_t position, double threshold, TokenMode mode) {
  if (position == 0 || position >= transcript.size())
    throw Error(ErrorCode::InvalidArgument, "drift check needs a turn with a predecessor");
  const auto& prev = transcript.turns[position - 1];
  const auto& curr = transcript.turns[position];
  DriftReport r = detect_drift(prev.text, curr.text, threshold, mode);
  r.turn_index = curr.index;
  if (r.drifted) r.realignment = generate_realignment(curr.text);
  return r;
}

std::string generate_realignment(std::string_view last_user_text) {
  std::string out = "(please confirm first: '";
  out += last_user_text;
  out += "')";
  return out;
}

}  // namespace msa::dialogue
