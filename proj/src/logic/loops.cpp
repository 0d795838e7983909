#include "msa/logic/loops.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_set>

namespace msa::logic {

namespace {

// Graph relabelled so that vertex ids follow lexicographic speaker order;
// adjacency lists are sorted and free of parallel edges.
struct DenseGraph {
  std::vector<SpeakerId> names;
  std::vector<std::vector<std::size_t>> adj;
};

DenseGraph densify(const ResponsibilityGraph& graph) {
  DenseGraph d;
  d.names = graph.nodes();
  std::sort(d.names.begin(), d.names.end());
  std::unordered_map<std::string, std::size_t> id;
  for (std::size_t i = 0; i < d.names.size(); ++i) id.emplace(d.names[i].value, i);
  d.adj.resize(d.names.size());
  for (const auto& e : graph.edges()) d.adj[id.at(e.from.value)].push_back(id.at(e.to.value));
  for (auto& a : d.adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return d;
}

// Iterative Tarjan over the vertices accepted by `keep`. Returns the
// component id per vertex (npos for rejected vertices).
std::vector<std::size_t> strongly_connected(const std::vector<std::vector<std::size_t>>& adj,
                                            const std::function<bool(std::size_t)>& keep,
                                            std::size_t& component_count) {
  constexpr auto npos = static_cast<std::size_t>(-1);
  const std::size_t n = adj.size();
  std::vector<std::size_t> index(n, npos), low(n, 0), comp(n, npos);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t counter = 0;
  component_count = 0;

  struct Frame {
    std::size_t v;
    std::size_t next;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (!keep(root) || index[root] != npos) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& f = call.back();
      if (f.next < adj[f.v].size()) {
        auto w = adj[f.v][f.next++];
        if (!keep(w)) continue;
        if (index[w] == npos) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      auto v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = component_count;
        } while (w != v);
        ++component_count;
      }
    }
  }
  return comp;
}

bool has_self_edge(const std::vector<std::size_t>& adj_v, std::size_t v) {
  return std::binary_search(adj_v.begin(), adj_v.end(), v);
}

// Johnson's elementary-circuit search rooted at `start`, restricted to the
// vertices flagged in `allowed` (all of which are >= start).
class CircuitSearch {
 public:
  CircuitSearch(const DenseGraph& g, std::vector<Loop>& out) : g_(g), out_(out), blocked_(g.adj.size(), false), b_(g.adj.size()) {}

  void run(std::size_t start, const std::vector<bool>& allowed) {
    start_ = start;
    allowed_ = &allowed;
    for (std::size_t v = 0; v < allowed.size(); ++v) {
      if (!allowed[v]) continue;
      blocked_[v] = false;
      b_[v].clear();
    }
    circuit(start);
  }

 private:
  bool circuit(std::size_t v) {
    bool found = false;
    path_.push_back(v);
    blocked_[v] = true;
    for (auto w : g_.adj[v]) {
      if (!(*allowed_)[w]) continue;
      if (w == start_) {
        Loop loop;
        for (auto p : path_) loop.push_back(g_.names[p]);
        out_.push_back(std::move(loop));
        found = true;
      } else if (!blocked_[w] && circuit(w)) {
        found = true;
      }
    }
    if (found) {
      unblock(v);
    } else {
      for (auto w : g_.adj[v])
        if ((*allowed_)[w]) b_[w].insert(v);
    }
    path_.pop_back();
    return found;
  }

  void unblock(std::size_t u) {
    std::vector<std::size_t> work{u};
    while (!work.empty()) {
      auto x = work.back();
      work.pop_back();
      if (!blocked_[x]) continue;
      blocked_[x] = false;
      for (auto w : b_[x]) work.push_back(w);
      b_[x].clear();
    }
  }

  const DenseGraph& g_;
  std::vector<Loop>& out_;
  std::vector<bool> blocked_;
  std::vector<std::set<std::size_t>> b_;
  std::vector<std::size_t> path_;
  std::size_t start_ = 0;
  const std::vector<bool>* allowed_ = nullptr;
};

}  // namespace

LoopReport detect_closed_loops(const ResponsibilityGraph& graph, const LoopOptions& options) {
  LoopReport report;
  auto g = densify(graph);
  const std::size_t n = g.names.size();

  std::size_t ncomp = 0;
  auto comp = strongly_connected(g.adj, [](std::size_t) { return true; }, ncomp);
  std::vector<std::vector<std::size_t>> members(ncomp);
  for (std::size_t v = 0; v < n; ++v) members[comp[v]].push_back(v);
  std::vector<bool> cyclic(ncomp, false);
  for (std::size_t c = 0; c < ncomp; ++c)
    cyclic[c] = members[c].size() > 1 || has_self_edge(g.adj[members[c][0]], members[c][0]);
  for (std::size_t c = 0; c < ncomp; ++c) {
    if (!cyclic[c]) continue;
    std::vector<SpeakerId> names;
    for (auto v : members[c]) names.push_back(g.names[v]);
    report.cyclic_components.push_back(std::move(names));
  }
  std::sort(report.cyclic_components.begin(), report.cyclic_components.end());

  if (n > options.max_exhaustive_nodes) {
    report.mode = LoopReport::Mode::ComponentSummary;
    return report;
  }

  CircuitSearch search(g, report.loops);
  std::vector<bool> allowed(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (!cyclic[comp[s]]) continue;
    // Sub-problem: vertices >= s inside s's component; the cycles through s
    // all live in the strongly-connected piece of that subgraph holding s.
    const auto& group = members[comp[s]];
    auto in_group = [&](std::size_t v) { return v >= s && comp[v] == comp[s]; };
    std::size_t sub_count = 0;
    auto sub = strongly_connected(g.adj, in_group, sub_count);
    for (auto v : group) allowed[v] = in_group(v) && sub[v] == sub[s];
    search.run(s, allowed);
    for (auto v : group) allowed[v] = false;
  }
  std::sort(report.loops.begin(), report.loops.end());
  report.loops.erase(std::unique(report.loops.begin(), report.loops.end()), report.loops.end());
  return report;
}

bool is_closed_loop(const ResponsibilityGraph& graph, std::span<const SpeakerId> sequence) {
  if (sequence.empty()) return false;
  std::unordered_set<std::string> pairs;
  for (const auto& e : graph.edges()) pairs.insert(e.from.value + '\x1f' + e.to.value);
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    const auto& from = sequence[i];
    const auto& to = sequence[(i + 1) % sequence.size()];
    if (!pairs.count(from.value + '\x1f' + to.value)) return false;
  }
  return true;
}

std::vector<SpeakerId> detect_partial_drift(const ResponsibilityGraph& graph) {
  std::vector<SpeakerId> out;
  for (const auto& n : graph.nodes())
    if (graph.out_degree(n) == 0) out.push_back(n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<SpeakerId, SpeakerId>> transitive_closure(const ResponsibilityGraph& graph) {
  auto g = densify(graph);
  std::vector<std::pair<SpeakerId, SpeakerId>> out;
  const std::size_t n = g.names.size();
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> frontier(g.adj[s].begin(), g.adj[s].end());
    while (!frontier.empty()) {
      auto v = frontier.back();
      frontier.pop_back();
      if (seen[v]) continue;
      seen[v] = true;
      for (auto w : g.adj[v]) frontier.push_back(w);
    }
    for (std::size_t v = 0; v < n; ++v)
      if (seen[v]) out.emplace_back(g.names[s], g.names[v]);
  }
  return out;
}

}  // namespace msa::logic
