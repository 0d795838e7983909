#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "msa/transcript.hpp"

namespace msa::logic {

/// R(from, to): responsibility passes from one speaker to another. Self-edges
/// model self-retention.
struct ResponsibilityEdge {
  SpeakerId from;
  SpeakerId to;
  std::optional<std::size_t> utterance_index;
  std::optional<std::string> label;

  bool operator==(const ResponsibilityEdge&) const = default;
};

enum class AutoRegister { On, Off };

/// Speakers plus an insertion-ordered multiset of transfer edges.
///
/// Mutation through `push_edge` is single-writer and amortized O(1); the
/// free function `add_transfer` gives the value-semantics view. `work()`
/// counts elementary steps (hash probes, appends, element relocations on
/// growth) so tests can check the linear-time contract.
class ResponsibilityGraph {
 public:
  /// Returns true if the node was new.
  bool add_node(const SpeakerId& id);
  bool has_node(const SpeakerId& id) const;

  /// Errors: UnknownSpeaker when an endpoint is missing and `mode` is Off.
  void push_edge(ResponsibilityEdge edge, AutoRegister mode = AutoRegister::On);

  const std::vector<SpeakerId>& nodes() const noexcept { return nodes_; }
  const std::vector<ResponsibilityEdge>& edges() const noexcept { return edges_; }
  std::size_t out_degree(const SpeakerId& id) const;
  std::optional<std::size_t> node_position(const SpeakerId& id) const;

  std::uint64_t work() const noexcept { return work_; }

  bool operator==(const ResponsibilityGraph& other) const {
    return nodes_ == other.nodes_ && edges_ == other.edges_;
  }

 private:
  std::size_t ensure_node(const SpeakerId& id);

  std::vector<SpeakerId> nodes_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<ResponsibilityEdge> edges_;
  std::vector<std::size_t> out_degree_;
  std::uint64_t work_ = 0;
};

/// Returns `graph` with `edge` appended. Pass an rvalue to avoid the copy.
ResponsibilityGraph add_transfer(ResponsibilityGraph graph, ResponsibilityEdge edge,
                                 AutoRegister mode = AutoRegister::On);

/// Exchange format: {"nodes": [...], "edges": [{"from", "to", "utterance_index"?, "label"?}]}.
/// When "nodes" is present, edges must only reference listed nodes.
ResponsibilityGraph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const ResponsibilityGraph& graph);

}  // namespace msa::logic
