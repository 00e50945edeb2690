#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

namespace vaxsent::vader {

// Ternary sentiment class. The numeric encoding is fixed and used
// everywhere: labels, one-hot targets, confusion-matrix axes, reports.
enum class Polarity : int { Neutral = 0, Negative = 1, Positive = 2 };

inline constexpr int to_index(Polarity p) { return static_cast<int>(p); }
Polarity polarity_from_index(int k);
std::string_view polarity_name(Polarity p);

struct SentimentScores {
  double pos = 0.0;
  double neg = 0.0;
  double neu = 0.0;
  double compound = 0.0;
};

// Valence dictionary loaded from the tab-separated lexicon file of the
// VADER distribution (Hutto & Gilbert 2014): token \t mean-valence \t
// stddev \t raw ratings. Lookups are case-insensitive.
class Lexicon {
 public:
  static Lexicon load(const std::filesystem::path& path);
  static Lexicon load(std::istream& in, const std::string& name = "<stream>");

  std::optional<double> valence(const std::string& lowercase_token) const;
  bool contains(const std::string& lowercase_token) const;
  std::size_t size() const { return entries_.size(); }
  std::uint64_t content_hash() const;

 private:
  std::unordered_map<std::string, double> entries_;
};

// Rule tables of the reference algorithm, exposed for tests.
const std::unordered_map<std::string, double>& booster_table();
const std::unordered_set<std::string>& negation_table();
const std::unordered_map<std::string, double>& idiom_table();
const std::unordered_set<std::string>& contrastive_conjunctions();

// Lexicon-and-rules scoring: valence lookup per token with ALL-CAPS
// emphasis, degree-modifier adjustment over the three preceding tokens with
// distance decay, negation flips, "but" clause re-weighting, special-case
// idioms, and !/? emphasis. pos/neg/neu are mass ratios summing to 1 for any
// input with at least one scored token; compound is the normalized valence
// sum in [-1, +1].
SentimentScores score(std::string_view text, const Lexicon& lexicon);

// raw_sum / sqrt(raw_sum^2 + alpha), clamped to [-1, +1].
double normalize_score(double raw_sum, double alpha = 15.0);

// compound >= threshold -> Positive, <= -threshold -> Negative, else Neutral.
Polarity classify(const SentimentScores& scores, double threshold = 0.05);

}  // namespace vaxsent::vader
