#pragma once

#include <string>
#include <string_view>
#include <vector>

// Small ASCII text helpers shared by the tokenizers and keyword matchers.
namespace msa::text {

std::string to_lower(std::string_view s);
std::string to_upper(std::string_view s);
std::string_view trim(std::string_view s);

/// Splits on ASCII whitespace; never yields empty tokens.
std::vector<std::string> split_whitespace(std::string_view s);

/// Lowercases, drops ASCII punctuation, then splits on whitespace.
/// Non-ASCII bytes (curly quotes, accents) are kept as part of the token.
std::vector<std::string> normalized_tokens(std::string_view s);

/// Replaces UTF-8 curly single quotes with ASCII '.
std::string fold_apostrophes(std::string_view s);

/// Collapses runs of whitespace to a single space and trims both ends.
std::string collapse_whitespace(std::string_view s);

bool contains(std::string_view haystack, std::string_view needle);
bool contains_icase(std::string_view haystack, std::string_view needle);
/// Substring match with curly apostrophes folded to ASCII on both sides.
bool contains_phrase(std::string_view haystack, std::string_view needle, bool case_sensitive);
bool ends_with(std::string_view s, std::string_view suffix);

/// Tokens long enough to carry topic content (length >= 4, not a stopword).
std::vector<std::string> content_tokens(std::string_view s);

}  // namespace msa::text
