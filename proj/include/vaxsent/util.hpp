#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vaxsent::util {

// --- UTF-8 / Unicode helpers ---------------------------------------------

// Decodes the codepoint starting at byte offset `i` and advances `i` past it.
// Malformed bytes decode as U+FFFD and advance by one byte.
char32_t decode_utf8(std::string_view s, std::size_t& i);

// Number of UTF-16 code units needed for the string (astral codepoints
// count as two). Used where surrogate-pair length semantics matter.
std::size_t utf16_length(std::string_view s);

// Unicode whitespace, superset of ASCII space/tab/newline (covers the
// NBSP/ideographic-space family seen in scraped tweet text).
bool is_unicode_space(char32_t cp);

// Splits on runs of Unicode whitespace; never returns empty tokens.
std::vector<std::string> split_unicode_ws(std::string_view s);

// --- ASCII helpers --------------------------------------------------------

inline char ascii_lower(char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; }

std::string to_lower_ascii(std::string_view s);

// The 32-character ASCII punctuation set !"#$%&'()*+,-./:;<=>?@[\]^_`{|}~
bool is_ascii_punct(char c);

std::string trim(std::string_view s);

bool starts_with_ci(std::string_view s, std::string_view prefix);

// --- Hashing --------------------------------------------------------------

std::uint64_t fnv1a64(std::string_view s, std::uint64_t seed = 0xcbf29ce484222325ULL);

std::string hex64(std::uint64_t v);

// --- Deterministic RNG ----------------------------------------------------

// mt19937_64 has a standard-mandated output sequence; the derived draws
// below avoid std::uniform_*_distribution, whose mapping is
// implementation-defined, so that seeded runs agree across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // uniform in [0, n); modulo bias is irrelevant at the sizes used here
  std::uint64_t bounded(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(bounded(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(bounded(v.size()))];
  }

 private:
  std::mt19937_64 gen_;
};

// --- Timestamps -----------------------------------------------------------

// Accepts "YYYY-MM-DD HH:MM:SS", ISO-8601 ("YYYY-MM-DDTHH:MM:SS[.fff][Z|±HH:MM|±HHMM]")
// and bare "YYYY-MM-DD"; validates the calendar date and normalizes to UTC.
std::optional<std::int64_t> parse_timestamp_utc(std::string_view s);

// Canonical "YYYY-MM-DD HH:MM:SS" in UTC.
std::string format_timestamp_utc(std::int64_t epoch_seconds);

// Days since 1970-01-01 for the UTC calendar day containing the instant.
std::int64_t utc_day(std::int64_t epoch_seconds);

// "YYYY-MM-DD" for a day index from utc_day().
std::string format_day(std::int64_t day_index);

}  // namespace vaxsent::util
