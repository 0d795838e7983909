#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "msa/logic/graph.hpp"
#include "msa/transcript.hpp"

namespace msa::dialogue {

enum class CommitmentStatus { Active, Updated, Transferred, Closed, Abandoned };

std::string_view to_string(CommitmentStatus s) noexcept;
bool is_terminal(CommitmentStatus s) noexcept;
bool is_live(CommitmentStatus s) noexcept;  // active or updated
/// Allowed lifecycle moves; closed and abandoned are terminal.
bool transition_allowed(CommitmentStatus from, CommitmentStatus to) noexcept;

struct StatusChange {
  CommitmentStatus status = CommitmentStatus::Active;
  std::size_t turn_index = 0;
  std::optional<SpeakerId> target;

  bool operator==(const StatusChange&) const = default;
};

struct Commitment {
  std::string id;
  SpeakerId holder;
  std::string text;
  CommitmentStatus status = CommitmentStatus::Active;
  std::size_t created_at = 0;
  std::vector<StatusChange> history;  // starts with the creation entry
  std::optional<SpeakerId> target;    // set once transferred

  /// The speaker currently answerable for the commitment.
  const SpeakerId& responsible() const { return target ? *target : holder; }

  bool operator==(const Commitment&) const = default;
};

struct PatternSet {
  std::vector<std::string> commitment_patterns = {"I will", "will", "should"};
  std::vector<std::string> transfer_markers = {"I'll leave that to", "I will leave that to", "leave it to you"};
  bool case_sensitive = true;

  bool commits(std::string_view text) const;
  bool transfers(std::string_view text) const;
};

class ChainState {
 public:
  const std::vector<Commitment>& commitments() const noexcept { return commitments_; }
  const logic::ResponsibilityGraph& graph() const noexcept { return graph_; }
  const Commitment* find(std::string_view id) const;

  /// Moves commitment `id` to `to`. Transfers need a target and add a graph
  /// edge from the current responsible speaker. Errors: InvalidArgument for an
  /// unknown id, InvalidTransition for a disallowed move or a missing target.
  void transition(std::string_view id, CommitmentStatus to, std::size_t turn_index,
                  const std::optional<SpeakerId>& target = std::nullopt);

  /// Bookkeeping operations performed so far (hash probes and appends).
  std::uint64_t work() const noexcept { return work_; }

  /// Compares commitments and graph; the work counter is ignored.
  bool operator==(const ChainState& other) const;

 private:
  friend ChainState update_commitments(ChainState state, const DialogueTurn& turn, const PatternSet& patterns);

  Commitment& get(std::string_view id);

  std::vector<Commitment> commitments_;
  std::unordered_set<std::string> seen_texts_;
  std::optional<SpeakerId> last_speaker_;
  logic::ResponsibilityGraph graph_;
  std::uint64_t work_ = 0;
};

/// Ingests one turn. A committing utterance not seen before (whitespace
/// normalized) becomes an active commitment of its speaker. A transfer marker
/// hands the speaker's latest live commitment to the previous speaker.
ChainState update_commitments(ChainState state, const DialogueTurn& turn, const PatternSet& patterns = {});

ChainState replay_commitments(const Transcript& transcript, const PatternSet& patterns = {},
                              ChainState state = {});

/// A live commitment whose holder spoke `silent_turns` (>= k) times since
/// last referring to it. Reported only; the state is not changed.
struct AbandonmentFlag {
  std::string commitment_id;
  SpeakerId holder;
  std::size_t silent_turns = 0;
};

std::vector<AbandonmentFlag> find_silent_abandonments(const ChainState& state, const Transcript& transcript,
                                                      std::size_t k = 5);

}  // namespace msa::dialogue
