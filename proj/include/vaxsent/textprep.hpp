#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace vaxsent::textprep {

struct CleanText {
  std::string original;
  std::string cleaned;
  std::vector<std::string> tokens;
};

// Applies the cleaning rules in a fixed order:
//   1. URL spans removed (http://, https://, www., t.co/)
//   2. e-mail tokens removed (user@host.tld shapes)
//   3. newline characters become single spaces
//   4. double and single quotes deleted
//   5. ASCII punctuation deleted
//   6. whitespace runs collapsed, ends trimmed
// Letter case is preserved; emoji and other non-ASCII pass through.
CleanText clean_text(std::string_view raw);

// Splits on Unicode whitespace; no empty tokens.
std::vector<std::string> tokenize(std::string_view text);

// Single-space join; throws std::invalid_argument if a token contains
// whitespace (that would break the tokenize round-trip).
std::string detokenize(const std::vector<std::string>& tokens);

}  // namespace vaxsent::textprep
