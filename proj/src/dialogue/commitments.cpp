#include "msa/dialogue/commitments.hpp"

#include <algorithm>
#include <set>

#include "msa/error.hpp"
#include "msa/text.hpp"

namespace msa::dialogue {

std::string_view to_string(CommitmentStatus s) noexcept {
  switch (s) {
    case CommitmentStatus::Active: return "active";
    case CommitmentStatus::Updated: return "updated";
    case CommitmentStatus::Transferred: return "transferred";
    case CommitmentStatus::Closed: return "closed";
    case CommitmentStatus::Abandoned: return "abandoned";
  }
  return "";
}

bool is_terminal(CommitmentStatus s) noexcept {
  return s == CommitmentStatus::Closed || s == CommitmentStatus::Abandoned;
}

bool is_live(CommitmentStatus s) noexcept {
  return s == CommitmentStatus::Active || s == CommitmentStatus::Updated;
}

bool transition_allowed(CommitmentStatus from, CommitmentStatus to) noexcept {
  if (is_terminal(from) || to == CommitmentStatus::Active) return false;
  if (from == CommitmentStatus::Transferred) return to != CommitmentStatus::Updated;
  return true;
}

namespace {

bool any_match(std::string_view text, const std::vector<std::string>& patterns, bool case_sensitive) {
  return std::any_of(patterns.begin(), patterns.end(),
                     [&](const auto& p) { return text::contains_phrase(text, p, case_sensitive); });
}

}  // namespace

bool PatternSet::commits(std::string_view text) const {
  return any_match(text, commitment_patterns, case_sensitive);
}

bool PatternSet::transfers(std::string_view text) const { return any_match(text, transfer_markers, case_sensitive); }

const Commitment* ChainState::find(std::string_view id) const {
  auto it = std::find_if(commitments_.begin(), commitments_.end(), [&](const auto& c) { return c.id == id; });
  return it == commitments_.end() ? nullptr : &*it;
}

Commitment& ChainState::get(std::string_view id) {
  auto it = std::find_if(commitments_.begin(), commitments_.end(), [&](const auto& c) { return c.id == id; });
  if (it == commitments_.end()) throw Error(ErrorCode::InvalidArgument, "unknown commitment", std::string(id));
  return *it;
}

void ChainState::transition(std::string_view id, CommitmentStatus to, std::size_t turn_index,
                            const std::optional<SpeakerId>& target) {
  Commitment& c = get(id);
  if (!transition_allowed(c.status, to))
    throw Error(ErrorCode::InvalidTransition,
                std::string(to_string(c.status)) + " -> " + std::string(to_string(to)) + " not allowed", c.id);
  if (to == CommitmentStatus::Transferred) {
    if (!target) throw Error(ErrorCode::InvalidTransition, "transfer needs a target speaker", c.id);
    graph_.push_edge({c.responsible(), *target, turn_index, c.id});
    c.target = *target;
  }
  c.status = to;
  c.history.push_back({to, turn_index, to == CommitmentStatus::Transferred ? target : std::nullopt});
  ++work_;
}

bool ChainState::operator==(const ChainState& other) const {
  return commitments_ == other.commitments_ && graph_ == other.graph_;
}

ChainState update_commitments(ChainState state, const DialogueTurn& turn, const PatternSet& patterns) {
  state.graph_.add_node(turn.speaker);
  const auto previous = state.last_speaker_;
  state.last_speaker_ = turn.speaker;

  std::string key = text::collapse_whitespace(turn.text);
  ++state.work_;
  if (state.seen_texts_.count(key)) return state;

  if (patterns.transfers(turn.text)) {
    state.seen_texts_.insert(std::move(key));
    ++state.work_;
    if (!previous || *previous == turn.speaker) return state;
    // Latest live commitment the speaker currently answers for.
    auto& cs = state.commitments_;
    auto it = std::find_if(cs.rbegin(), cs.rend(),
                           [&](const Commitment& c) { return is_live(c.status) && c.responsible() == turn.speaker; });
    if (it != cs.rend()) state.transition(it->id, CommitmentStatus::Transferred, turn.index, previous);
    return state;
  }

  if (patterns.commits(turn.text)) {
    Commitment c;
    c.id = "c" + std::to_string(state.commitments_.size() + 1);
    c.holder = turn.speaker;
    c.text = turn.text;
    c.created_at = turn.index;
    c.history.push_back({CommitmentStatus::Active, turn.index, std::nullopt});
    state.commitments_.push_back(std::move(c));
    state.seen_texts_.insert(std::move(key));
    state.work_ += 2;
  }
  return state;
}

ChainState replay_commitments(const Transcript& transcript, const PatternSet& patterns, ChainState state) {
  for (const auto& turn : transcript.turns) state = update_commitments(std::move(state), turn, patterns);
  return state;
}

std::vector<AbandonmentFlag> find_silent_abandonments(const ChainState& state, const Transcript& transcript,
                                                      std::size_t k) {
  std::vector<AbandonmentFlag> flags;
  for (const auto& c : state.commitments()) {
    if (!is_live(c.status)) continue;
    const auto words = text::content_tokens(c.text);
    const std::set<std::string> topic(words.begin(), words.end());
    std::size_t silent = 0;
    for (const auto& t : transcript.turns) {
      if (t.index <= c.created_at || t.speaker != c.responsible()) continue;
      const auto toks = text::content_tokens(t.text);
      const bool refers = std::any_of(toks.begin(), toks.end(), [&](const auto& w) { return topic.count(w) != 0; });
      silent = refers ? 0 : silent + 1;
    }
    if (silent >= k) flags.push_back({c.id, c.responsible(), silent});
  }
  return flags;
}

}  // namespace msa::dialogue
