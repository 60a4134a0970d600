#include "poetics/lexical.hpp"

#include <algorithm>

#include "poetics/error.hpp"
#include "poetics/stats.hpp"
#include "poetics/text.hpp"
#include "poetics/tokenizer.hpp"

namespace poetics {
namespace {

constexpr std::array<PronounCategory, kPronounCategories> kCategories{
    PronounCategory::first_singular, PronounCategory::first_plural,    PronounCategory::second,
    PronounCategory::third_feminine, PronounCategory::third_masculine, PronounCategory::third};

constexpr std::array<std::string_view, 5> kFirstSingular{"i", "me", "my", "mine", "myself"};
constexpr std::array<std::string_view, 5> kFirstPlural{"we", "us", "our", "ours", "ourselves"};
constexpr std::array<std::string_view, 10> kSecond{"you",  "your", "yours", "yourself", "yourselves",
                                                   "thou", "thee", "thy",   "thine",    "thyself"};
constexpr std::array<std::string_view, 4> kThirdFeminine{"she", "her", "hers", "herself"};
constexpr std::array<std::string_view, 4> kThirdMasculine{"he", "his", "him", "himself"};
constexpr std::array<std::string_view, 9> kThird{"they",       "them", "their", "theirs", "themself",
                                                 "themselves", "it",   "its",   "itself"};

// Version tag is part of every report so results can be tied to this list.
constexpr std::string_view kStopwordVersion = "poetics-en-1";

constexpr std::array<std::string_view, 153> kStopwords{
    "a",       "about",   "above",    "after",    "again",   "against", "all",     "am",      "an",
    "and",     "any",     "are",      "as",       "at",      "be",      "because", "been",    "before",
    "being",   "below",   "between",  "both",     "but",     "by",      "can",     "could",   "did",
    "do",      "does",    "doing",    "down",     "during",  "each",    "few",     "for",     "from",
    "further", "had",     "has",      "have",     "having",  "he",      "her",     "here",    "hers",
    "herself", "him",     "himself",  "his",      "how",     "i",       "if",      "in",      "into",
    "is",      "it",      "it's",     "its",      "itself",  "just",    "me",      "more",    "most",
    "my",      "myself",  "no",       "nor",      "not",     "now",     "of",      "off",     "on",
    "once",    "only",    "or",       "other",    "our",     "ours",    "ourselves", "out",   "over",
    "own",     "same",    "she",      "should",   "so",      "some",    "such",    "than",    "that",
    "the",     "their",   "theirs",   "them",     "themselves", "then", "there",   "these",   "they",
    "this",    "those",   "through",  "to",       "too",     "under",   "until",   "up",      "upon",
    "very",    "was",     "we",       "were",     "what",    "when",    "where",   "which",   "while",
    "who",     "whom",    "why",      "will",     "with",    "would",   "you",     "your",    "yours",
    "yourself", "yourselves", "thou", "thee",     "thy",     "thine",   "ye",      "o",       "oh",
    "shall",   "may",     "might",    "must",     "let",     "yet",     "whose",   "'tis",    "don't",
    "i'm",     "i've",    "we're",    "you're",   "can't",   "won't",   "didn't",  "doesn't", "isn't"};

}  // namespace

std::string_view to_string(PronounCategory c) {
  switch (c) {
    case PronounCategory::first_singular: return "first_singular";
    case PronounCategory::first_plural: return "first_plural";
    case PronounCategory::second: return "second";
    case PronounCategory::third_feminine: return "third_feminine";
    case PronounCategory::third_masculine: return "third_masculine";
    case PronounCategory::third: return "third";
  }
  return "third";
}

std::span<const PronounCategory> all_pronoun_categories() { return kCategories; }

std::span<const std::string_view> pronouns_in(PronounCategory c) {
  switch (c) {
    case PronounCategory::first_singular: return kFirstSingular;
    case PronounCategory::first_plural: return kFirstPlural;
    case PronounCategory::second: return kSecond;
    case PronounCategory::third_feminine: return kThirdFeminine;
    case PronounCategory::third_masculine: return kThirdMasculine;
    case PronounCategory::third: return kThird;
  }
  return {};
}

std::optional<PronounCategory> pronoun_category(std::string_view token) {
  for (auto c : kCategories) {
    auto words = pronouns_in(c);
    if (std::find(words.begin(), words.end(), token) != words.end()) return c;
  }
  return std::nullopt;
}

PronounCounts& PronounCounts::operator+=(const PronounCounts& other) {
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
  tokens += other.tokens;
  return *this;
}

PronounCounts count_pronouns(std::span<const std::string> tokens) {
  PronounCounts out;
  out.tokens = tokens.size();
  for (const auto& t : tokens) {
    if (auto c = pronoun_category(t)) ++out.counts[static_cast<std::size_t>(*c)];
  }
  return out;
}

PronounProfile pronoun_profile(std::span<const PronounCounts> per_poem, PronounNormalization mode) {
  if (per_poem.empty()) throw Error("pronoun profile: no poems to count");
  PronounProfile p;
  p.poems = per_poem.size();
  PronounCounts total;
  for (const auto& c : per_poem) total += c;
  p.tokens = total.tokens;
  p.counts = total.counts;
  if (mode == PronounNormalization::pooled) {
    if (total.tokens == 0) return p;
    for (std::size_t i = 0; i < kPronounCategories; ++i)
      p.per_100_words[i] = 100.0 * static_cast<double>(total.counts[i]) / static_cast<double>(total.tokens);
    return p;
  }
  for (std::size_t i = 0; i < kPronounCategories; ++i) {
    std::vector<double> rates;
    for (const auto& c : per_poem) {
      if (c.tokens == 0) continue;
      rates.push_back(100.0 * static_cast<double>(c.counts[i]) / static_cast<double>(c.tokens));
    }
    p.per_100_words[i] = order_free_mean(std::move(rates));
  }
  return p;
}

PronounProfile pronoun_profile(const Corpus& corpus, const std::set<std::string>& exclude_subjects,
                               PronounNormalization mode) {
  std::vector<PronounCounts> per_poem;
  for (const auto& rec : corpus.records) {
    if (rec.subject && exclude_subjects.contains(*rec.subject)) continue;
    per_poem.push_back(count_pronouns(tokens_of(rec.text)));
  }
  if (per_poem.empty()) throw Error("pronoun profile: corpus is empty after subject exclusion");
  return pronoun_profile(per_poem, mode);
}

std::string_view stopword_list_version() { return kStopwordVersion; }

std::span<const std::string_view> stopwords() { return kStopwords; }

bool is_stopword(std::string_view token) {
  return std::find(kStopwords.begin(), kStopwords.end(), token) != kStopwords.end();
}

bool matches_touchstone(std::string_view token, const TouchstoneGroup& group) {
  for (const auto& entry : group) {
    if (!entry.empty() && entry.back() == '*') {
      if (token.starts_with(std::string_view(entry).substr(0, entry.size() - 1))) return true;
    } else if (token == entry) {
      return true;
    }
  }
  return false;
}

std::vector<double> touchstone_coverage(std::span<const std::vector<std::string>> poem_tokens,
                                        std::span<const TouchstoneGroup> groups) {
  std::vector<double> out;
  for (const auto& group : groups) {
    std::size_t hits = 0;
    for (const auto& tokens : poem_tokens) {
      if (std::any_of(tokens.begin(), tokens.end(), [&](const auto& t) { return matches_touchstone(t, group); }))
        ++hits;
    }
    out.push_back(poem_tokens.empty() ? 0.0 : 100.0 * static_cast<double>(hits) / poem_tokens.size());
  }
  return out;
}

std::vector<double> touchstone_coverage(const Corpus& corpus, std::span<const TouchstoneGroup> groups) {
  std::vector<std::vector<std::string>> tokens;
  tokens.reserve(corpus.size());
  for (const auto& rec : corpus.records) tokens.push_back(tokens_of(rec.text));
  return touchstone_coverage(tokens, groups);
}

TouchstoneGroup parse_touchstone_group(std::string_view spec) {
  TouchstoneGroup group;
  std::size_t start = 0;
  while (start <= spec.size()) {
    auto comma = spec.find(',', start);
    auto item = text::trim(spec.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (!item.empty()) group.push_back(text::ascii_lower(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (group.empty()) throw Error("empty touchstone group '" + std::string(spec) + "'");
  return group;
}

}  // namespace poetics
