#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "msa/logic/graph.hpp"

namespace msa::logic {

using Loop = std::vector<SpeakerId>;

struct LoopOptions {
  /// Above this node count only cyclic strongly-connected components are reported.
  std::size_t max_exhaustive_nodes = 10'000;
};

struct LoopReport {
  enum class Mode { Exhaustive, ComponentSummary };

  Mode mode = Mode::Exhaustive;
  /// Elementary cycles, each rotated so its lexicographically smallest
  /// speaker comes first; sorted, no duplicates. Empty in ComponentSummary mode.
  std::vector<Loop> loops;
  /// Strongly-connected components that contain a cycle (sorted members).
  std::vector<std::vector<SpeakerId>> cyclic_components;

  static bool is_self_retention(const Loop& loop) { return loop.size() == 1; }
};

/// Closed responsibility loops: every elementary directed cycle of the
/// transfer graph, parallel edges collapsed, self-edges as length-1 loops.
LoopReport detect_closed_loops(const ResponsibilityGraph& graph, const LoopOptions& options = {});

/// Sequence reading: true iff R(x1,x2) ... R(xn-1,xn), R(xn,x1) all hold.
/// An empty sequence is never a loop.
bool is_closed_loop(const ResponsibilityGraph& graph, std::span<const SpeakerId> sequence);

/// Partial drift: speakers with no outgoing transfer, sorted.
std::vector<SpeakerId> detect_partial_drift(const ResponsibilityGraph& graph);

/// All pairs (x, y) with y reachable from x along one or more edges, sorted.
/// Never applied implicitly by the other operations.
std::vector<std::pair<SpeakerId, SpeakerId>> transitive_closure(const ResponsibilityGraph& graph);

}  // namespace msa::logic
