#include "msa/scoring/annotate.hpp"

#include <algorithm>
#include <set>

#include "msa/error.hpp"
#include "msa/scoring/shift_rate.hpp"
#include "msa/text.hpp"

namespace msa::scoring {

namespace {

using TokenSet = std::set<std::string>;

TokenSet token_set(std::string_view s) {
  auto toks = text::content_tokens(s);
  return {toks.begin(), toks.end()};
}

bool intersects(const TokenSet& a, const TokenSet& b) {
  return std::any_of(a.begin(), a.end(), [&](const auto& t) { return b.count(t) != 0; });
}

bool any_phrase(std::string_view utterance, const std::vector<std::string>& phrases) {
  return std::any_of(phrases.begin(), phrases.end(),
                     [&](const auto& p) { return text::contains_icase(utterance, p); });
}

std::size_t count_phrase_turns(const std::vector<const DialogueTurn*>& turns, const std::vector<std::string>& phrases) {
  return static_cast<std::size_t>(
      std::count_if(turns.begin(), turns.end(), [&](const DialogueTurn* t) { return any_phrase(t->text, phrases); }));
}

int banded(double fraction, double high, double mid) { return fraction >= high ? 2 : fraction >= mid ? 1 : 0; }

void load_list(const nlohmann::json& j, const char* key, std::vector<std::string>& dst) {
  if (!j.contains(key)) return;
  if (!j[key].is_array()) throw Error(ErrorCode::MalformedJson, std::string("'") + key + "' must be an array");
  dst.clear();
  for (const auto& v : j[key]) {
    if (!v.is_string()) throw Error(ErrorCode::MalformedJson, std::string("'") + key + "' entries must be strings");
    dst.push_back(v.get<std::string>());
  }
}

}  // namespace

RubricRuleSet RubricRuleSet::defaults() {
  RubricRuleSet r;
  r.tone_flip_markers = {"lol", "lmao", "haha", "whatever", "just kidding", "jk", "!!", "ugh"};
  r.register_blur_markers = {"i dunno", "i mean,", "kind of", "sort of", "or something", "weird"};
  r.attribution_phrases = {"i believe", "i care", "i stay", "i will", "i'll", "i take", "i promise",
                           "i'm responsible", "you should", "you promised", "your responsibility",
                           "no one is willing", "it's on me", "it's on you"};
  r.continuity_phrases = {"as you said", "as i said", "earlier", "you promised", "i still", "still",
                          "again", "as before", "like i said"};
  r.transfer_phrases = {"leave that to you", "leave it to you", "over to you", "your turn", "hand this over",
                        "unless you let me know"};
  r.evasive_phrases = {"i dunno", "whatever", "not my problem", "who knows", "let's talk about",
                       "doesn't matter"};
  r.closure_phrases = {"i will", "i'll", "i stay", "i don't run", "i won't", "i take", "i promise", "i commit",
                       "i choose", "that settles"};
  r.mirroring_phrases = {"i see your point", "i follow", "as you put it", "you're saying", "in other words",
                         "building on", "let me add"};
  r.repair_phrases = {"off-topic", "off topic", "not quite what i meant", "back to", "what i meant was",
                      "let me rephrase", "to clarify"};
  return r;
}

RubricRuleSet RubricRuleSet::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::MalformedJson, "rubric rules must be an object");
  static const std::set<std::string> known = {
      "tone_flip_markers", "register_blur_markers", "attribution_phrases", "continuity_phrases",
      "transfer_phrases",  "evasive_phrases",       "closure_phrases",     "mirroring_phrases",
      "repair_phrases",    "fragment_min_tokens",   "role_policy"};
  for (const auto& [key, value] : j.items())
    if (!known.count(key)) throw Error(ErrorCode::UnknownKey, "unknown rubric rule key", key);

  RubricRuleSet r = defaults();
  load_list(j, "tone_flip_markers", r.tone_flip_markers);
  load_list(j, "register_blur_markers", r.register_blur_markers);
  load_list(j, "attribution_phrases", r.attribution_phrases);
  load_list(j, "continuity_phrases", r.continuity_phrases);
  load_list(j, "transfer_phrases", r.transfer_phrases);
  load_list(j, "evasive_phrases", r.evasive_phrases);
  load_list(j, "closure_phrases", r.closure_phrases);
  load_list(j, "mirroring_phrases", r.mirroring_phrases);
  load_list(j, "repair_phrases", r.repair_phrases);
  if (j.contains("fragment_min_tokens")) {
    if (!j["fragment_min_tokens"].is_number_unsigned())
      throw Error(ErrorCode::MalformedJson, "'fragment_min_tokens' must be a non-negative integer");
    r.fragment_min_tokens = j["fragment_min_tokens"].get<std::size_t>();
  }
  if (j.contains("role_policy")) r.role_policy = dialogue::RolePolicy::from_json(j["role_policy"]);
  return r;
}

std::optional<SpeakerId> default_focus(const Transcript& transcript) {
  for (const auto& t : transcript.turns)
    if (t.turn_role == TurnRole::User) return t.speaker;
  for (const auto& t : transcript.turns)
    if (t.turn_role != TurnRole::System) return t.speaker;
  return std::nullopt;
}

Annotation auto_annotate(const Transcript& transcript, const RubricRuleSet& rules,
                         const std::optional<SpeakerId>& focus_in) {
  Annotation out;
  const auto focus = focus_in ? focus_in : default_focus(transcript);
  if (!focus) return out;
  out.focus = *focus;

  std::vector<const DialogueTurn*> dialog;  // system turns excluded
  std::vector<const DialogueTurn*> mine;
  std::vector<const DialogueTurn*> partner;
  for (const auto& t : transcript.turns) {
    if (t.turn_role == TurnRole::System) continue;
    dialog.push_back(&t);
    (t.speaker == *focus ? mine : partner).push_back(&t);
  }
  std::vector<TokenSet> toks;
  for (const auto* t : dialog) toks.push_back(token_set(t->text));
  auto& s = out.scores;
  auto& conf = out.confidence;
  constexpr auto P = 0, R = 1, C = 2;

  // P1: uncontrolled tone flips.
  const auto flips = count_phrase_turns(mine, rules.tone_flip_markers);
  s.pragmatic[0] = flips == 0 ? 2 : flips <= 2 ? 1 : 0;
  conf[P][0] = flips == 0 ? 0.4 : 0.6;

  // P2: function-role stability over the focus speaker's turns.
  if (mine.size() >= 2) {
    std::vector<PragmaticRole> roles;
    for (const auto* t : mine) roles.push_back(t->function_role.value_or(rules.role_policy.classify(t->text)));
    const double rate = count_role_shifts(std::span<const PragmaticRole>(roles)).value();
    s.pragmatic[1] = rate <= 1.0 / 3.0 ? 2 : rate <= 2.0 / 3.0 ? 1 : 0;
    conf[P][1] = 0.5;
  } else {
    s.pragmatic[1] = 2;
    conf[P][1] = 0.2;
  }

  // P3: fragmented utterances.
  if (!mine.empty()) {
    const auto whole = std::count_if(mine.begin(), mine.end(), [&](const DialogueTurn* t) {
      return text::split_whitespace(t->text).size() >= rules.fragment_min_tokens;
    });
    s.pragmatic[2] = banded(static_cast<double>(whole) / static_cast<double>(mine.size()), 0.8, 0.5);
  }
  conf[P][2] = 0.5;

  // P4: register blurring.
  const auto blur = count_phrase_turns(mine, rules.register_blur_markers);
  s.pragmatic[3] = 3 - static_cast<int>(std::min<std::size_t>(3, blur));
  conf[P][3] = 0.4;

  // R1: explicit attribution.
  const auto attributions = count_phrase_turns(mine, rules.attribution_phrases);
  s.responsibility[0] = static_cast<int>(std::min<std::size_t>(2, attributions));
  conf[R][0] = 0.6;

  // R2: continuity with the preceding turn or an explicit reaffirmation.
  {
    std::size_t eligible = 0, continued = 0;
    for (std::size_t i = 1; i < dialog.size(); ++i) {
      if (dialog[i]->speaker != *focus) continue;
      ++eligible;
      continued += any_phrase(dialog[i]->text, rules.continuity_phrases) || intersects(toks[i], toks[i - 1]);
    }
    s.responsibility[1] =
        eligible == 0 ? 1 : banded(static_cast<double>(continued) / static_cast<double>(eligible), 2.0 / 3.0, 0.25);
    conf[R][1] = 0.4;
  }

  // R3: legitimate versus evasive transfer.
  const auto evasions = count_phrase_turns(mine, rules.evasive_phrases);
  if (count_phrase_turns(mine, rules.transfer_phrases) > 0 || count_phrase_turns(partner, rules.transfer_phrases) > 0)
    s.responsibility[2] = evasions == 0 ? 2 : 1;
  else
    s.responsibility[2] = evasions == 0 ? 1 : 0;
  conf[R][2] = 0.4;

  // R4: closure of the chain in the focus speaker's final turn.
  if (!mine.empty()) {
    const auto* last = mine.back();
    const TokenSet last_toks = token_set(last->text);
    bool echoes_own = false;
    for (std::size_t i = 0; i + 1 < mine.size(); ++i) echoes_own = echoes_own || intersects(last_toks, token_set(mine[i]->text));
    if (any_phrase(last->text, rules.closure_phrases)) s.responsibility[3] = 3;
    else if (echoes_own) s.responsibility[3] = 2;
    else if (evasions == 0) s.responsibility[3] = 1;
  }
  conf[R][3] = 0.3;

  // C1: consecutive turns that share topic content.
  double c1_fraction = 0.0;
  if (dialog.size() >= 2) {
    std::size_t linked = 0;
    for (std::size_t i = 1; i < dialog.size(); ++i) linked += intersects(toks[i], toks[i - 1]);
    c1_fraction = static_cast<double>(linked) / static_cast<double>(dialog.size() - 1);
    s.context[0] = banded(c1_fraction, 0.6, 0.3);
  } else {
    s.context[0] = 2;
  }
  conf[C][0] = 0.5;

  // C2: mirroring across speaker changes, in either direction.
  {
    std::size_t eligible = 0, mirrored = 0;
    for (std::size_t i = 1; i < dialog.size(); ++i) {
      if (dialog[i]->speaker == dialog[i - 1]->speaker) continue;
      ++eligible;
      mirrored += any_phrase(dialog[i]->text, rules.mirroring_phrases) || intersects(toks[i], toks[i - 1]);
    }
    s.context[1] =
        eligible == 0 ? 1 : banded(static_cast<double>(mirrored) / static_cast<double>(eligible), 1.0 / 3.0, 0.01);
    conf[C][1] = 0.5;
  }

  // C3: the focus speaker repairs drift explicitly, or there is little to repair.
  bool repaired = false;
  for (const auto* t : mine) repaired = repaired || any_phrase(t->text, rules.repair_phrases);
  s.context[2] = repaired ? 2 : c1_fraction >= 0.3 ? 1 : 0;
  conf[C][2] = 0.4;

  // C4: vocabulary both parties rely on.
  {
    TokenSet a, b;
    for (std::size_t i = 0; i < dialog.size(); ++i) (dialog[i]->speaker == *focus ? a : b).insert(toks[i].begin(), toks[i].end());
    std::size_t shared = 0;
    for (const auto& t : a) shared += b.count(t);
    s.context[3] = static_cast<int>(std::min<std::size_t>(3, shared));
    conf[C][3] = 0.5;
  }

  s.validate();
  return out;
}

}  // namespace msa::scoring
