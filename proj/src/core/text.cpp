#include "msa/text.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace msa::text {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool is_ascii_punct(char c) {
  auto u = static_cast<unsigned char>(c);
  return u < 0x80 && std::ispunct(u) != 0;
}

constexpr std::array<std::string_view, 40> kStopwords = {
    "that",  "this",  "with",  "what",   "when",   "have",  "your",   "from",
    "about", "just",  "like",  "really", "then",   "there", "they",   "them",
    "because", "would", "could", "should", "were", "been",  "will",   "into",
    "than",  "some",  "more",  "also",   "only",   "even",  "which",  "their",
    "here",  "does",  "said",  "very",   "thats",  "dont",  "youre",  "mean"};

}  // namespace

std::string fold_apostrophes(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 &&
        static_cast<unsigned char>(s[i + 1]) == 0x80 &&
        (static_cast<unsigned char>(s[i + 2]) == 0x99 || static_cast<unsigned char>(s[i + 2]) == 0x98)) {
      out.push_back('\'');
      i += 2;
    } else {
      out.push_back(s[i]);
    }
  }
  return out;
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string to_upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_whitespace(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    std::size_t start = i;
    while (i < s.size() && !is_space(s[i])) ++i;
    if (i > start) out.emplace_back(s.substr(start, i - start));
  }
  return out;
}

std::vector<std::string> normalized_tokens(std::string_view s) {
  std::string cleaned;
  cleaned.reserve(s.size());
  for (char c : fold_apostrophes(s)) {
    if (is_ascii_punct(c)) continue;
    cleaned.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return split_whitespace(cleaned);
}

std::string collapse_whitespace(std::string_view s) {
  std::string out;
  for (const auto& tok : split_whitespace(s)) {
    if (!out.empty()) out.push_back(' ');
    out += tok;
  }
  return out;
}

bool contains(std::string_view haystack, std::string_view needle) {
  return haystack.find(needle) != std::string_view::npos;
}

bool contains_icase(std::string_view haystack, std::string_view needle) {
  return to_lower(fold_apostrophes(haystack)).find(to_lower(fold_apostrophes(needle))) !=
         std::string::npos;
}

bool contains_phrase(std::string_view haystack, std::string_view needle, bool case_sensitive) {
  if (case_sensitive) return fold_apostrophes(haystack).find(fold_apostrophes(needle)) != std::string::npos;
  return contains_icase(haystack, needle);
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

std::vector<std::string> content_tokens(std::string_view s) {
  std::vector<std::string> out;
  for (auto& tok : normalized_tokens(s)) {
    if (tok.size() < 4) continue;
    if (std::find(kStopwords.begin(), kStopwords.end(), tok) != kStopwords.end()) continue;
    out.push_back(std::move(tok));
  }
  return out;
}

}  // namespace msa::text
