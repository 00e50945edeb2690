#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace vaxsent::ingest {

// One validated row of the 16-column tweet corpus.
struct TweetRecord {
  std::string id;
  std::string user_name;
  std::optional<std::string> user_location;
  std::optional<std::string> user_description;
  std::optional<std::int64_t> user_created;  // epoch seconds, UTC
  std::optional<std::int64_t> user_followers;
  std::optional<std::int64_t> user_friends;
  std::optional<std::int64_t> user_favourites;
  std::optional<bool> user_verified;
  std::int64_t date = 0;  // epoch seconds, UTC
  std::string text;
  std::vector<std::string> hashtags;  // bare names, no '#'
  std::string source;
  std::optional<std::int64_t> retweets;
  std::optional<std::int64_t> favorites;
  std::optional<bool> is_retweet;

  bool operator==(const TweetRecord&) const = default;
};

inline constexpr std::array<std::string_view, 16> kColumns = {
    "id",           "user_name",      "user_location", "user_description",
    "user_created", "user_followers", "user_friends",  "user_favourites",
    "user_verified", "date",          "text",          "hashtags",
    "source",       "retweets",       "favorites",     "is_retweet"};

enum class SchemaMode { Strict, Lenient };

struct IngestSummary {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  std::map<std::string, std::size_t> rejection_reasons;
  std::size_t duplicate_ids = 0;
  std::size_t warnings = 0;

  nlohmann::json to_json() const;
};

struct IngestResult {
  std::vector<TweetRecord> records;
  IngestSummary summary;
};

// Throws std::runtime_error for a missing file or a header lacking the
// required columns (id, date, text). Row-level failures are counted, never
// silently kept.
IngestResult load_corpus(const std::filesystem::path& path, SchemaMode mode);
IngestResult load_corpus(std::istream& in, SchemaMode mode);

// Parses the bracketed single-quoted list format used by the corpus export,
// e.g. ['PfizerBioNTech', 'covid']. An empty cell gives an empty list.
// Malformed syntax gives an empty list and sets *malformed.
std::vector<std::string> parse_hashtag_field(std::string_view raw, bool* malformed = nullptr);

std::string format_hashtag_field(std::span<const std::string> tags);

// Serializes records back to the 16-column CSV; ingest(write(ingest(x)))
// reproduces the records exactly.
void write_corpus(std::ostream& out, std::span<const TweetRecord> records);

}  // namespace vaxsent::ingest
