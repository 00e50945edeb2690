#include "vaxsent/ingest.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "vaxsent/csv.hpp"
#include "vaxsent/util.hpp"

namespace vaxsent::ingest {

namespace {

std::optional<std::int64_t> parse_count(std::string_view s) {
  std::string t = util::trim(s);
  if (t.empty()) return std::nullopt;
  // the corpus export stores NaN-padded float columns ("2589.0")
  double v = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || p != t.data() + t.size()) return std::nullopt;
  if (!std::isfinite(v) || v < 0 || v != std::floor(v) || v > 9.0e18) return std::nullopt;
  return static_cast<std::int64_t>(v);
}

std::optional<bool> parse_bool(std::string_view s) {
  std::string t = util::to_lower_ascii(util::trim(s));
  if (t == "true" || t == "1" || t == "1.0") return true;
  if (t == "false" || t == "0" || t == "0.0") return false;
  return std::nullopt;
}

std::optional<std::string> opt_str(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return s;
}

}  // namespace

nlohmann::json IngestSummary::to_json() const {
  nlohmann::json reasons = nlohmann::json::object();
  for (const auto& [k, v] : rejection_reasons) reasons[k] = v;
  return {{"accepted", accepted},
          {"rejected", rejected},
          {"rejection_reasons", reasons},
          {"duplicate_ids", duplicate_ids},
          {"warnings", warnings}};
}

std::vector<std::string> parse_hashtag_field(std::string_view raw, bool* malformed) {
  if (malformed) *malformed = false;
  std::string cell = util::trim(raw);
  if (cell.empty()) return {};

  auto fail = [&]() -> std::vector<std::string> {
    if (malformed) *malformed = true;
    return {};
  };

  if (cell.front() != '[' || cell.back() != ']') return fail();
  std::string_view body{cell.data() + 1, cell.size() - 2};

  std::vector<std::string> tags;
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < body.size() && (body[i] == ' ' || body[i] == '\t')) ++i; };
  skip_ws();
  if (i == body.size()) return tags;  // "[]"

  while (true) {
    skip_ws();
    if (i >= body.size()) return fail();
    char quote = body[i];
    if (quote != '\'' && quote != '"') return fail();
    ++i;
    std::string tag;
    while (i < body.size() && body[i] != quote) tag.push_back(body[i++]);
    if (i >= body.size()) return fail();  // unterminated quote
    ++i;
    while (!tag.empty() && tag.front() == '#') tag.erase(tag.begin());
    if (!tag.empty()) tags.push_back(std::move(tag));
    skip_ws();
    if (i == body.size()) break;
    if (body[i] != ',') return fail();
    ++i;
  }
  return tags;
}

std::string format_hashtag_field(std::span<const std::string> tags) {
  if (tags.empty()) return "";
  std::string out = "[";
  for (std::size_t i = 0; i < tags.size(); ++i) {
    if (i) out += ", ";
    const char quote = tags[i].find('\'') == std::string::npos ? '\'' : '"';
    out += quote;
    out += tags[i];
    out += quote;
  }
  out += ']';
  return out;
}

IngestResult load_corpus(const std::filesystem::path& path, SchemaMode mode) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("corpus file not found: " + path.string());
  return load_corpus(in, mode);
}

IngestResult load_corpus(std::istream& in, SchemaMode mode) {
  csv::Reader reader(in);
  std::vector<std::string> row;
  if (!reader.next(row)) throw std::runtime_error("corpus is empty (no header row)");

  std::unordered_map<std::string, std::size_t> col;
  for (std::size_t i = 0; i < row.size(); ++i) col[util::trim(row[i])] = i;
  for (std::string_view required : {"id", "date", "text"}) {
    if (!col.count(std::string(required))) {
      throw std::runtime_error("corpus header missing required column: " + std::string(required));
    }
  }

  auto idx = [&](std::string_view name) -> std::optional<std::size_t> {
    auto it = col.find(std::string(name));
    if (it == col.end()) return std::nullopt;
    return it->second;
  };
  const auto c_id = idx("id"), c_user_name = idx("user_name"), c_loc = idx("user_location"),
             c_desc = idx("user_description"), c_created = idx("user_created"),
             c_followers = idx("user_followers"), c_friends = idx("user_friends"),
             c_favourites = idx("user_favourites"), c_verified = idx("user_verified"),
             c_date = idx("date"), c_text = idx("text"), c_hashtags = idx("hashtags"),
             c_source = idx("source"), c_retweets = idx("retweets"), c_favorites = idx("favorites"),
             c_is_retweet = idx("is_retweet");

  IngestResult result;
  std::unordered_set<std::string> seen_ids;
  const bool strict = mode == SchemaMode::Strict;

  auto cell = [&](const std::vector<std::string>& r, std::optional<std::size_t> c) -> std::string {
    if (!c || *c >= r.size()) return "";
    return r[*c];
  };

  while (reader.next(row)) {
    auto reject = [&](const char* reason) {
      ++result.summary.rejected;
      ++result.summary.rejection_reasons[reason];
    };

    bool blank = true;
    for (const auto& f : row) {
      if (!f.empty()) { blank = false; break; }
    }
    if (blank) {
      reject("blank_line");
      continue;
    }
    if (strict && row.size() != col.size()) {
      reject("column_count");
      continue;
    }

    TweetRecord rec;
    rec.id = cell(row, c_id);
    rec.text = cell(row, c_text);
    if (util::trim(rec.text).empty()) {
      reject("empty_text");
      continue;
    }
    auto date = util::parse_timestamp_utc(cell(row, c_date));
    if (!date) {
      reject("bad_date");
      continue;
    }
    rec.date = *date;

    bool optional_failure = false;
    auto opt_count = [&](std::optional<std::size_t> c) -> std::optional<std::int64_t> {
      const std::string v = cell(row, c);
      auto parsed = parse_count(v);
      if (!parsed && !util::trim(v).empty()) optional_failure = true;
      return parsed;
    };
    auto opt_flag = [&](std::optional<std::size_t> c) -> std::optional<bool> {
      const std::string v = cell(row, c);
      auto parsed = parse_bool(v);
      if (!parsed && !util::trim(v).empty()) optional_failure = true;
      return parsed;
    };

    rec.user_name = cell(row, c_user_name);
    rec.user_location = opt_str(cell(row, c_loc));
    rec.user_description = opt_str(cell(row, c_desc));
    const std::string created = cell(row, c_created);
    rec.user_created = util::parse_timestamp_utc(created);
    if (!rec.user_created && !util::trim(created).empty()) optional_failure = true;
    rec.user_followers = opt_count(c_followers);
    rec.user_friends = opt_count(c_friends);
    rec.user_favourites = opt_count(c_favourites);
    rec.user_verified = opt_flag(c_verified);
    rec.source = cell(row, c_source);
    rec.retweets = opt_count(c_retweets);
    rec.favorites = opt_count(c_favorites);
    rec.is_retweet = opt_flag(c_is_retweet);

    bool tags_malformed = false;
    rec.hashtags = parse_hashtag_field(cell(row, c_hashtags), &tags_malformed);
    if (tags_malformed) {
      if (strict) {
        reject("bad_hashtags");
        continue;
      }
      ++result.summary.warnings;
    }
    if (optional_failure) {
      if (strict) {
        reject("bad_optional_field");
        continue;
      }
      ++result.summary.warnings;  // lenient: malformed optionals become absent
    }

    if (!seen_ids.insert(rec.id).second) ++result.summary.duplicate_ids;
    ++result.summary.accepted;
    result.records.push_back(std::move(rec));
  }
  return result;
}

void write_corpus(std::ostream& out, std::span<const TweetRecord> records) {
  std::vector<std::string> row;
  row.reserve(kColumns.size());
  for (auto c : kColumns) row.emplace_back(c);
  csv::write_row(out, row);

  auto num = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : ""; };
  auto flag = [](const std::optional<bool>& v) {
    return v ? std::string(*v ? "True" : "False") : "";
  };

  for (const auto& r : records) {
    row.clear();
    row.push_back(r.id);
    row.push_back(r.user_name);
    row.push_back(r.user_location.value_or(""));
    row.push_back(r.user_description.value_or(""));
    row.push_back(r.user_created ? util::format_timestamp_utc(*r.user_created) : "");
    row.push_back(num(r.user_followers));
    row.push_back(num(r.user_friends));
    row.push_back(num(r.user_favourites));
    row.push_back(flag(r.user_verified));
    row.push_back(util::format_timestamp_utc(r.date));
    row.push_back(r.text);
    row.push_back(format_hashtag_field(r.hashtags));
    row.push_back(r.source);
    row.push_back(num(r.retweets));
    row.push_back(num(r.favorites));
    row.push_back(flag(r.is_retweet));
    csv::write_row(out, row);
  }
}

}  // namespace vaxsent::ingest
