#include <random>

#include <gtest/gtest.h>

#include "../support/graph_oracle.hpp"
#include "msa/error.hpp"
#include "msa/logic/constraints.hpp"
#include "msa/logic/graph.hpp"
#include "msa/logic/loops.hpp"

using namespace msa;
using namespace msa::logic;

namespace {

ResponsibilityEdge edge(const char* a, const char* b) { return {SpeakerId(a), SpeakerId(b), std::nullopt, std::nullopt}; }

ResponsibilityGraph graph_of(std::initializer_list<std::pair<const char*, const char*>> edges) {
  ResponsibilityGraph g;
  for (auto [a, b] : edges) g = add_transfer(std::move(g), edge(a, b));
  return g;
}

std::vector<SpeakerId> ids(std::initializer_list<const char*> names) {
  std::vector<SpeakerId> out;
  for (auto n : names) out.emplace_back(n);
  return out;
}

}  // namespace

TEST(AddTransfer, Examples) {
  auto g = add_transfer(ResponsibilityGraph{}, edge("a", "b"));
  EXPECT_EQ(g.nodes(), ids({"a", "b"}));
  EXPECT_EQ(g.edges().size(), 1u);

  auto parallel = add_transfer(g, edge("a", "b"));
  EXPECT_EQ(parallel.edges().size(), 2u);
  EXPECT_EQ(parallel.out_degree(SpeakerId("a")), 2u);
  EXPECT_EQ(g.edges().size(), 1u) << "the input graph is a value and stays unchanged";

  try {
    add_transfer(g, edge("a", "c"), AutoRegister::Off);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownSpeaker);
  }
}

TEST(AddTransfer, PreservesInsertionOrderAndMetadata) {
  ResponsibilityGraph g;
  g = add_transfer(std::move(g), {SpeakerId("x"), SpeakerId("y"), 3, std::string("c1")});
  g = add_transfer(std::move(g), edge("y", "x"));
  ASSERT_EQ(g.edges().size(), 2u);
  EXPECT_EQ(g.edges()[0].utterance_index, 3u);
  EXPECT_EQ(g.edges()[0].label, "c1");
  EXPECT_EQ(g.edges()[1].from, SpeakerId("y"));
  EXPECT_EQ(graph_from_json(graph_to_json(g)), g);
}

TEST(GraphJson, StrictWhenNodesListed) {
  auto ok = graph_from_json(nlohmann::json::parse(R"({"edges":[{"from":"a","to":"b"}]})"));
  EXPECT_EQ(ok.nodes().size(), 2u);
  try {
    graph_from_json(nlohmann::json::parse(R"({"nodes":["a"],"edges":[{"from":"a","to":"b"}]})"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownSpeaker);
  }
  EXPECT_THROW(graph_from_json(nlohmann::json::parse(R"({"edges":[{"from":"a"}]})")), Error);
  EXPECT_THROW(graph_from_json(nlohmann::json::parse(R"({"vertices":[]})")), Error);
}

TEST(ClosedLoops, Examples) {
  auto tri = detect_closed_loops(graph_of({{"a", "b"}, {"b", "c"}, {"c", "a"}}));
  EXPECT_EQ(tri.loops, std::vector<Loop>{ids({"a", "b", "c"})});

  EXPECT_TRUE(detect_closed_loops(graph_of({{"a", "b"}, {"b", "c"}})).loops.empty());

  auto self = detect_closed_loops(graph_of({{"a", "a"}}));
  ASSERT_EQ(self.loops.size(), 1u);
  EXPECT_EQ(self.loops[0], ids({"a"}));
  EXPECT_TRUE(LoopReport::is_self_retention(self.loops[0]));
}

TEST(ClosedLoops, CanonicalRotationAndParallelCollapse) {
  auto r = detect_closed_loops(graph_of({{"c", "a"}, {"b", "c"}, {"a", "b"}, {"a", "b"}, {"c", "b"}}));
  EXPECT_EQ(r.loops, (std::vector<Loop>{ids({"a", "b", "c"}), ids({"b", "c"})}));
  EXPECT_EQ(r.cyclic_components.size(), 1u);
}

TEST(ClosedLoops, ComponentSummaryAboveBound) {
  auto g = graph_of({{"a", "b"}, {"b", "a"}, {"c", "c"}, {"d", "e"}});
  auto r = detect_closed_loops(g, LoopOptions{3});
  EXPECT_EQ(r.mode, LoopReport::Mode::ComponentSummary);
  EXPECT_TRUE(r.loops.empty());
  EXPECT_EQ(r.cyclic_components, (std::vector<std::vector<SpeakerId>>{ids({"a", "b"}), ids({"c"})}));
}

TEST(ClosedLoops, SequenceReading) {
  auto g = graph_of({{"a", "b"}, {"b", "c"}, {"c", "a"}, {"d", "d"}});
  EXPECT_TRUE(is_closed_loop(g, ids({"a", "b", "c"})));
  EXPECT_TRUE(is_closed_loop(g, ids({"b", "c", "a"})));
  EXPECT_FALSE(is_closed_loop(g, ids({"a", "c", "b"})));
  EXPECT_TRUE(is_closed_loop(g, ids({"d"})));
  EXPECT_FALSE(is_closed_loop(g, {}));
}

TEST(PartialDrift, Examples) {
  EXPECT_EQ(detect_partial_drift(graph_of({{"a", "b"}, {"b", "c"}})), ids({"c"}));
  EXPECT_TRUE(detect_partial_drift(graph_of({{"a", "b"}, {"b", "a"}})).empty());
  ResponsibilityGraph lone;
  lone.add_node(SpeakerId("a"));
  EXPECT_EQ(detect_partial_drift(lone), ids({"a"}));
}

TEST(TransitiveClosure, ReachabilityPairs) {
  auto closure = transitive_closure(graph_of({{"a", "b"}, {"b", "c"}}));
  std::vector<std::pair<SpeakerId, SpeakerId>> expected = {
      {SpeakerId("a"), SpeakerId("b")}, {SpeakerId("a"), SpeakerId("c")}, {SpeakerId("b"), SpeakerId("c")}};
  EXPECT_EQ(closure, expected);
}

TEST(GraphProperty, MatchesBruteForceOracles) {
  std::mt19937 rng(1475);
  for (int iter = 0; iter < 1500; ++iter) {
    auto raw = oracle::random_graph(rng, 8, 16);
    auto g = oracle::build(raw);
    ASSERT_EQ(oracle::as_names(detect_closed_loops(g).loops), oracle::brute_force_loops(raw)) << "iteration " << iter;
    std::set<std::string> drift;
    for (const auto& s : detect_partial_drift(g)) drift.insert(s.value);
    ASSERT_EQ(drift, oracle::brute_force_drift(raw));
  }
}

TEST(GraphProperty, LoopSetIgnoresInsertionOrder) {
  std::mt19937 rng(99);
  for (int iter = 0; iter < 300; ++iter) {
    auto raw = oracle::random_graph(rng, 8, 16);
    auto shuffled = raw;
    std::shuffle(shuffled.edges.begin(), shuffled.edges.end(), rng);
    std::shuffle(shuffled.nodes.begin(), shuffled.nodes.end(), rng);
    ASSERT_EQ(detect_closed_loops(oracle::build(raw)).loops, detect_closed_loops(oracle::build(shuffled)).loops);
  }
}

TEST(GraphComplexity, AddTransferWorkIsLinear) {
  std::vector<double> per_edge;
  for (std::size_t n : {1'000u, 10'000u, 100'000u}) {
    std::mt19937 rng(5);
    ResponsibilityGraph g;
    for (std::size_t i = 0; i < n; ++i) {
      auto a = "s" + std::to_string(rng() % 64);
      auto b = "s" + std::to_string(rng() % 64);
      g = add_transfer(std::move(g), {SpeakerId(a), SpeakerId(b), i, std::nullopt});
    }
    per_edge.push_back(static_cast<double>(g.work()) / static_cast<double>(n));
  }
  auto [lo, hi] = std::minmax_element(per_edge.begin(), per_edge.end());
  EXPECT_LE(*hi / *lo, 1.2);
}

namespace {

Transcript make_transcript(std::initializer_list<const char*> texts) {
  Transcript t;
  bool user = true;
  for (auto s : texts) {
    t.append(SpeakerId(user ? "u" : "a"), s, user ? TurnRole::User : TurnRole::Assistant);
    user = !user;
  }
  return t;
}

}  // namespace

TEST(ContextConstraints, ExhaustiveEvaluationCount) {
  auto t = make_transcript({"one", "two", "three"});
  std::vector<ContextRule> rules(2);
  rules[0] = {"has-x", PredicateKind::KeywordPresence, {"x"}, "", 1.0, 0, Severity::Warn};
  rules[1] = {"no-two", PredicateKind::KeywordAbsence, {"two"}, "", 1.0, 0, Severity::Violation};
  auto report = check_context_constraints(t, rules);
  EXPECT_EQ(report.evaluations, 6u);
  std::vector<RuleFinding> expected = {{"has-x", 0, Severity::Warn},
                                       {"has-x", 1, Severity::Warn},
                                       {"no-two", 1, Severity::Violation},
                                       {"has-x", 2, Severity::Warn}};
  EXPECT_EQ(report.findings, expected);

  auto empty = check_context_constraints(t, std::vector<ContextRule>{});
  EXPECT_TRUE(empty.findings.empty());
  EXPECT_EQ(empty.evaluations, 0u);
}

TEST(ContextConstraints, TopicAnchorOnCaseFour) {
  auto t = load_transcript_jsonl(std::string(MSA_FIXTURE_DIR) + "/case4.jsonl");
  std::vector<ContextRule> rules(1);
  rules[0] = {"anchor", PredicateKind::TopicAnchorPresence, {}, "responsibility", 1.0, 0, Severity::Violation};
  auto report = check_context_constraints(t, rules);
  auto aliens = std::find_if(t.turns.begin(), t.turns.end(),
                             [](const DialogueTurn& d) { return d.text.find("aliens") != std::string::npos; });
  ASSERT_NE(aliens, t.turns.end());
  EXPECT_TRUE(std::any_of(report.findings.begin(), report.findings.end(),
                          [&](const RuleFinding& f) { return f.utterance_index == aliens->index; }));
  EXPECT_FALSE(std::any_of(report.findings.begin(), report.findings.end(),
                           [](const RuleFinding& f) { return f.utterance_index == 0; }))
      << "the opening turn names the anchor";
}

TEST(ContextConstraints, NewTokenRatioAndWindows) {
  auto t = make_transcript({"the cat sat", "the cat ran", "a dog barked loudly"});
  std::vector<ContextRule> rules(1);
  rules[0] = {"novelty", PredicateKind::MaxNewTokenRatio, {}, "", 0.5, 0, Severity::Warn};
  auto report = check_context_constraints(t, rules);
  // turn 1: 1/3 new; turn 2: 4/4 new
  ASSERT_EQ(report.findings.size(), 1u);
  EXPECT_EQ(report.findings[0].utterance_index, 2u);

  auto anchored = make_transcript({"responsibility first", "unrelated", "still unrelated", "more"});
  std::vector<ContextRule> anchor(1);
  anchor[0] = {"anchor", PredicateKind::TopicAnchorPresence, {}, "RESPONSIBILITY", 1.0, 1, Severity::Violation};
  auto r = check_context_constraints(anchored, anchor);
  ASSERT_EQ(r.findings.size(), 2u);
  EXPECT_EQ(r.findings[0].utterance_index, 2u);
}

TEST(ContextConstraints, EvaluationCountIsTurnsTimesRules) {
  std::mt19937 rng(3);
  auto rules = load_rules(std::string(MSA_DATA_DIR) + "/rules.json");
  for (int iter = 0; iter < 50; ++iter) {
    Transcript t;
    std::size_t n = 1 + rng() % 40;
    for (std::size_t i = 0; i < n; ++i) t.append(SpeakerId("s"), "word" + std::to_string(rng() % 9), TurnRole::User);
    std::vector<ContextRule> subset(rules.begin(), rules.begin() + static_cast<std::ptrdiff_t>(rng() % (rules.size() + 1)));
    EXPECT_EQ(check_context_constraints(t, subset).evaluations, n * subset.size());
  }
}

TEST(ContextConstraints, RuleFileValidation) {
  EXPECT_EQ(load_rules(std::string(MSA_DATA_DIR) + "/rules.json").size(), 3u);
  EXPECT_THROW(rules_from_json(nlohmann::json::parse(R"([{"rule_id":"x","predicate":"regex"}])")), Error);
  EXPECT_THROW(rules_from_json(nlohmann::json::parse(R"([{"rule_id":"x","predicate":"keyword_presence"}])")), Error);
  EXPECT_THROW(rules_from_json(nlohmann::json::parse(R"([{"rule_id":"x","predicate":"keyword_presence","keywords":["a"],"bogus":1}])")), Error);
  EXPECT_THROW(rules_from_json(nlohmann::json::parse(R"({})")), Error);
}
