#pragma once

// Test-only oracles for the responsibility-graph checks. Deliberately naive:
// they enumerate sequences directly from the definitions and share no code
// with the library's cycle search.

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "msa/logic/graph.hpp"

namespace msa::oracle {

struct RawGraph {
  std::vector<std::string> nodes;
  std::vector<std::pair<std::string, std::string>> edges;
};

inline bool has_edge(const RawGraph& g, const std::string& a, const std::string& b) {
  return std::any_of(g.edges.begin(), g.edges.end(), [&](const auto& e) { return e.first == a && e.second == b; });
}

/// Every sequence x1..xk of distinct nodes with R(xi, xi+1) and R(xk, x1),
/// keeping the rotation that starts at the smallest name.
inline std::set<std::vector<std::string>> brute_force_loops(const RawGraph& g) {
  std::set<std::vector<std::string>> out;
  std::vector<std::string> path;
  std::vector<bool> used(g.nodes.size(), false);
  std::function<void()> extend = [&]() {
    if (!path.empty() && has_edge(g, path.back(), path.front())) {
      if (*std::min_element(path.begin(), path.end()) == path.front()) out.insert(path);
    }
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
      if (used[i]) continue;
      if (!path.empty() && !has_edge(g, path.back(), g.nodes[i])) continue;
      used[i] = true;
      path.push_back(g.nodes[i]);
      extend();
      path.pop_back();
      used[i] = false;
    }
  };
  extend();
  return out;
}

inline std::set<std::string> brute_force_drift(const RawGraph& g) {
  std::set<std::string> out;
  for (const auto& n : g.nodes) {
    bool outgoing = false;
    for (const auto& e : g.edges) outgoing = outgoing || e.first == n;
    if (!outgoing) out.insert(n);
  }
  return out;
}

inline RawGraph random_graph(std::mt19937& rng, std::size_t max_nodes, std::size_t max_edges) {
  static const std::vector<std::string> names = {"ava", "bo", "cy", "dee", "eli", "fay", "gus", "hal", "ivy", "jo"};
  RawGraph g;
  std::size_t n = 1 + rng() % max_nodes;
  std::vector<std::string> pool(names.begin(), names.end());
  std::shuffle(pool.begin(), pool.end(), rng);
  g.nodes.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n));
  std::size_t m = rng() % (max_edges + 1);
  for (std::size_t i = 0; i < m; ++i) g.edges.emplace_back(g.nodes[rng() % n], g.nodes[rng() % n]);
  return g;
}

inline logic::ResponsibilityGraph build(const RawGraph& raw) {
  logic::ResponsibilityGraph g;
  for (const auto& n : raw.nodes) g.add_node(SpeakerId(n));
  for (const auto& [a, b] : raw.edges)
    g.push_edge({SpeakerId(a), SpeakerId(b), std::nullopt, std::nullopt}, logic::AutoRegister::Off);
  return g;
}

inline std::set<std::vector<std::string>> as_names(const std::vector<std::vector<SpeakerId>>& loops) {
  std::set<std::vector<std::string>> out;
  for (const auto& l : loops) {
    std::vector<std::string> names;
    for (const auto& s : l) names.push_back(s.value);
    out.insert(names);
  }
  return out;
}

}  // namespace msa::oracle
