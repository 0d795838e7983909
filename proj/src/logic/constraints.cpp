#include "msa/logic/constraints.hpp"

#include <fstream>
#include <unordered_set>

#include "msa/error.hpp"
#include "msa/text.hpp"

namespace msa::logic {

namespace {

using TokenSet = std::unordered_set<std::string>;

struct Context {
  const Transcript& transcript;
  std::size_t position;
  const TokenSet& history;  // tokens of every turn before `position`
};

bool any_keyword(std::string_view utterance, const std::vector<std::string>& keywords) {
  for (const auto& k : keywords)
    if (text::contains_icase(utterance, k)) return true;
  return false;
}

bool evaluate(const ContextRule& rule, const Context& ctx) {
  const auto& turns = ctx.transcript.turns;
  const auto& utterance = turns[ctx.position].text;
  switch (rule.kind) {
    case PredicateKind::KeywordPresence:
      return any_keyword(utterance, rule.keywords);
    case PredicateKind::KeywordAbsence:
      return !any_keyword(utterance, rule.keywords);
    case PredicateKind::MaxNewTokenRatio: {
      if (ctx.position == 0) return true;  // nothing to be new relative to
      auto tokens = text::normalized_tokens(utterance);
      if (tokens.empty()) return true;
      TokenSet windowed;
      const TokenSet* seen = &ctx.history;
      if (rule.window != 0) {
        auto first = ctx.position > rule.window ? ctx.position - rule.window : 0;
        for (auto i = first; i < ctx.position; ++i)
          for (auto& t : text::normalized_tokens(turns[i].text)) windowed.insert(std::move(t));
        seen = &windowed;
      }
      std::size_t fresh = 0;
      for (const auto& t : tokens) fresh += seen->count(t) == 0;
      return static_cast<double>(fresh) / static_cast<double>(tokens.size()) <= rule.max_ratio;
    }
    case PredicateKind::TopicAnchorPresence: {
      if (text::contains_icase(utterance, rule.anchor)) return true;
      auto first = ctx.position > rule.window ? ctx.position - rule.window : 0;
      for (auto i = first; i < ctx.position; ++i)
        if (text::contains_icase(turns[i].text, rule.anchor)) return true;
      return false;
    }
  }
  return true;
}

PredicateKind parse_kind(const std::string& s) {
  if (s == "keyword_presence") return PredicateKind::KeywordPresence;
  if (s == "keyword_absence") return PredicateKind::KeywordAbsence;
  if (s == "max_new_token_ratio") return PredicateKind::MaxNewTokenRatio;
  if (s == "topic_anchor_presence") return PredicateKind::TopicAnchorPresence;
  throw Error(ErrorCode::UnknownValue, "unknown context predicate '" + s + "'");
}

}  // namespace

std::string_view to_string(PredicateKind kind) noexcept {
  switch (kind) {
    case PredicateKind::KeywordPresence: return "keyword_presence";
    case PredicateKind::KeywordAbsence: return "keyword_absence";
    case PredicateKind::MaxNewTokenRatio: return "max_new_token_ratio";
    case PredicateKind::TopicAnchorPresence: return "topic_anchor_presence";
  }
  return "keyword_presence";
}

std::string_view to_string(Severity severity) noexcept {
  return severity == Severity::Warn ? "warn" : "violation";
}

ConstraintReport check_context_constraints(const Transcript& transcript, std::span<const ContextRule> rules) {
  ConstraintReport report;
  TokenSet history;
  const auto& turns = transcript.turns;
  for (std::size_t i = 0; i < turns.size(); ++i) {
    Context ctx{transcript, i, history};
    for (const auto& rule : rules) {
      ++report.evaluations;
      if (!evaluate(rule, ctx)) report.findings.push_back({rule.rule_id, turns[i].index, rule.severity});
    }
    for (auto& t : text::normalized_tokens(turns[i].text)) history.insert(std::move(t));
  }
  return report;
}

std::vector<ContextRule> rules_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorCode::MalformedJson, "rules file must be a JSON array");
  std::vector<ContextRule> rules;
  for (const auto& r : j) {
    if (!r.is_object()) throw Error(ErrorCode::MalformedJson, "rule must be an object");
    for (const auto& [key, _] : r.items())
      if (key != "rule_id" && key != "predicate" && key != "keywords" && key != "anchor" && key != "max_ratio" &&
          key != "window" && key != "severity")
        throw Error(ErrorCode::UnknownKey, "unknown rule key '" + key + "'");
    ContextRule rule;
    try {
      rule.rule_id = r.at("rule_id").get<std::string>();
      rule.kind = parse_kind(r.at("predicate").get<std::string>());
      if (r.contains("keywords")) rule.keywords = r["keywords"].get<std::vector<std::string>>();
      if (r.contains("anchor")) rule.anchor = r["anchor"].get<std::string>();
      if (r.contains("max_ratio")) rule.max_ratio = r["max_ratio"].get<double>();
      if (r.contains("window")) rule.window = r["window"].get<std::size_t>();
      auto sev = r.value("severity", std::string("violation"));
      if (sev == "warn") {
        rule.severity = Severity::Warn;
      } else if (sev == "violation") {
        rule.severity = Severity::Violation;
      } else {
        throw Error(ErrorCode::UnknownValue, "unknown severity '" + sev + "'");
      }
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::MalformedJson, std::string("bad rule: ") + e.what());
    }
    if (rule.rule_id.empty()) throw Error(ErrorCode::MalformedJson, "rule_id must be non-empty");
    if ((rule.kind == PredicateKind::KeywordPresence || rule.kind == PredicateKind::KeywordAbsence) &&
        rule.keywords.empty())
      throw Error(ErrorCode::MalformedJson, "rule '" + rule.rule_id + "' needs keywords");
    if (rule.kind == PredicateKind::TopicAnchorPresence && rule.anchor.empty())
      throw Error(ErrorCode::MalformedJson, "rule '" + rule.rule_id + "' needs an anchor");
    if (rule.max_ratio < 0.0 || rule.max_ratio > 1.0)
      throw Error(ErrorCode::RangeViolation, "max_ratio must lie in [0, 1]");
    rules.push_back(std::move(rule));
  }
  return rules;
}

std::vector<ContextRule> load_rules(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open rules file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::MalformedJson, e.what());
  }
  return rules_from_json(j);
}

nlohmann::json findings_to_json(const ConstraintReport& report) {
  nlohmann::json findings = nlohmann::json::array();
  for (const auto& f : report.findings)
    findings.push_back({{"rule_id", f.rule_id},
                        {"utterance_index", f.utterance_index},
                        {"severity", std::string(to_string(f.severity))}});
  return {{"findings", findings}, {"evaluations", report.evaluations}};
}

}  // namespace msa::logic
