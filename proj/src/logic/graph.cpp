#include "msa/logic/graph.hpp"

#include "msa/error.hpp"

namespace msa::logic {

namespace {

// Counts the relocations a push_back is about to cause.
template <typename T>
std::uint64_t growth_cost(const std::vector<T>& v) {
  return v.size() == v.capacity() ? v.size() : 0;
}

}  // namespace

std::size_t ResponsibilityGraph::ensure_node(const SpeakerId& id) {
  ++work_;
  auto [it, inserted] = index_.try_emplace(id.value, nodes_.size());
  if (inserted) {
    work_ += 1 + growth_cost(nodes_);
    nodes_.push_back(id);
    out_degree_.push_back(0);
  }
  return it->second;
}

bool ResponsibilityGraph::add_node(const SpeakerId& id) {
  if (id.value.empty()) throw Error(ErrorCode::InvalidArgument, "speaker id must be non-empty");
  auto before = nodes_.size();
  ensure_node(id);
  return nodes_.size() != before;
}

bool ResponsibilityGraph::has_node(const SpeakerId& id) const { return index_.count(id.value) != 0; }

std::optional<std::size_t> ResponsibilityGraph::node_position(const SpeakerId& id) const {
  auto it = index_.find(id.value);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t ResponsibilityGraph::out_degree(const SpeakerId& id) const {
  auto pos = node_position(id);
  return pos ? out_degree_[*pos] : 0;
}

void ResponsibilityGraph::push_edge(ResponsibilityEdge edge, AutoRegister mode) {
  if (edge.from.value.empty() || edge.to.value.empty())
    throw Error(ErrorCode::InvalidArgument, "edge endpoints must be non-empty");
  std::size_t from_pos;
  if (mode == AutoRegister::Off) {
    work_ += 2;
    auto f = node_position(edge.from);
    if (!f) throw Error(ErrorCode::UnknownSpeaker, "unknown speaker '" + edge.from.value + "'");
    if (!has_node(edge.to)) throw Error(ErrorCode::UnknownSpeaker, "unknown speaker '" + edge.to.value + "'");
    from_pos = *f;
  } else {
    from_pos = ensure_node(edge.from);
    ensure_node(edge.to);
  }
  ++out_degree_[from_pos];
  work_ += 2 + growth_cost(edges_);
  edges_.push_back(std::move(edge));
}

ResponsibilityGraph add_transfer(ResponsibilityGraph graph, ResponsibilityEdge edge, AutoRegister mode) {
  graph.push_edge(std::move(edge), mode);
  return graph;
}

ResponsibilityGraph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::MalformedJson, "graph must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (key != "nodes" && key != "edges") throw Error(ErrorCode::UnknownKey, "unknown graph key '" + key + "'");
  ResponsibilityGraph g;
  auto mode = AutoRegister::On;
  try {
    if (j.contains("nodes")) {
      mode = AutoRegister::Off;
      for (const auto& n : j.at("nodes")) g.add_node(SpeakerId(n.get<std::string>()));
    }
    if (j.contains("edges")) {
      for (const auto& e : j.at("edges")) {
        ResponsibilityEdge edge{SpeakerId(e.at("from").get<std::string>()), SpeakerId(e.at("to").get<std::string>()),
                                std::nullopt, std::nullopt};
        if (e.contains("utterance_index") && !e["utterance_index"].is_null())
          edge.utterance_index = e["utterance_index"].get<std::size_t>();
        if (e.contains("label") && !e["label"].is_null()) edge.label = e["label"].get<std::string>();
        g.push_edge(std::move(edge), mode);
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedJson, std::string("bad graph document: ") + e.what());
  }
  return g;
}

nlohmann::json graph_to_json(const ResponsibilityGraph& graph) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& n : graph.nodes()) nodes.push_back(n.value);
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : graph.edges()) {
    nlohmann::json je = {{"from", e.from.value}, {"to", e.to.value}};
    if (e.utterance_index) je["utterance_index"] = *e.utterance_index;
    if (e.label) je["label"] = *e.label;
    edges.push_back(std::move(je));
  }
  return {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

}  // namespace msa::logic
