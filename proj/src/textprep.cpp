#include "vaxsent/textprep.hpp"

#include <stdexcept>

#include "vaxsent/util.hpp"

namespace vaxsent::textprep {

using util::is_unicode_space;
using util::starts_with_ci;

namespace {

bool is_ws_byte(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

// Deletes URL spans. A span starts at "http://" or "https://" anywhere in a
// token, or at "www." / "t.co/" at a token start ("awww." must survive), and
// runs to the next whitespace.
std::string strip_urls(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  bool at_token_start = true;
  while (i < s.size()) {
    std::string_view rest = s.substr(i);
    bool is_url = starts_with_ci(rest, "http://") || starts_with_ci(rest, "https://") ||
                  (at_token_start && (starts_with_ci(rest, "www.") || starts_with_ci(rest, "t.co/")));
    if (is_url) {
      while (i < s.size() && !is_ws_byte(s[i])) ++i;
      at_token_start = true;
      continue;
    }
    at_token_start = is_ws_byte(s[i]);
    out.push_back(s[i]);
    ++i;
  }
  return out;
}

bool looks_like_email(std::string_view token) {
  std::size_t at = token.find('@');
  if (at == std::string_view::npos || at == 0 || at + 1 >= token.size()) return false;
  std::string_view domain = token.substr(at + 1);
  if (domain.find('@') != std::string_view::npos) return false;
  std::size_t dot = domain.find('.');
  return dot != std::string_view::npos && dot > 0 && dot + 1 < domain.size();
}

std::string strip_emails(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (is_ws_byte(s[i])) {
      out.push_back(s[i]);
      ++i;
      continue;
    }
    std::size_t end = i;
    while (end < s.size() && !is_ws_byte(s[end])) ++end;
    std::string_view token = s.substr(i, end - i);
    if (!looks_like_email(token)) out.append(token);
    i = end;
  }
  return out;
}

}  // namespace

CleanText clean_text(std::string_view raw) {
  CleanText result;
  result.original.assign(raw);

  std::string s = strip_urls(raw);
  s = strip_emails(s);

  std::string t;
  t.reserve(s.size());
  for (char c : s) {
    if (c == '\n' || c == '\r') {
      t.push_back(' ');
    } else if (c == '"' || c == '\'') {
      // deleted (also covered by the punctuation rule, kept as its own step)
    } else if (util::is_ascii_punct(c)) {
      // deleted
    } else {
      t.push_back(c);
    }
  }

  // collapse whitespace runs, trim ends
  result.tokens = tokenize(t);
  result.cleaned = detokenize(result.tokens);
  return result;
}

std::vector<std::string> tokenize(std::string_view text) {
  return util::split_unicode_ws(text);
}

std::string detokenize(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& tok : tokens) {
    std::size_t i = 0;
    while (i < tok.size()) {
      if (is_unicode_space(util::decode_utf8(tok, i))) {
        throw std::invalid_argument("detokenize: token contains whitespace: '" + tok + "'");
      }
    }
    if (!out.empty()) out.push_back(' ');
    out += tok;
  }
  return out;
}

}  // namespace vaxsent::textprep
