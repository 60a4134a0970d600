#pragma once

#include <array>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "poetics/corpus.hpp"

namespace poetics {

enum class PronounCategory { first_singular, first_plural, second, third_feminine, third_masculine, third };

inline constexpr std::size_t kPronounCategories = 6;

std::string_view to_string(PronounCategory c);
std::span<const PronounCategory> all_pronoun_categories();
std::span<const std::string_view> pronouns_in(PronounCategory c);

// Category of a lowercased token, if it is one of the listed pronouns.
std::optional<PronounCategory> pronoun_category(std::string_view token);

struct PronounCounts {
  std::array<std::size_t, kPronounCategories> counts{};
  std::size_t tokens = 0;

  PronounCounts& operator+=(const PronounCounts& other);
};

PronounCounts count_pronouns(std::span<const std::string> tokens);

enum class PronounNormalization { pooled, per_poem_mean };

struct PronounProfile {
  std::array<double, kPronounCategories> per_100_words{};
  std::size_t poems = 0;
  std::size_t tokens = 0;
  std::array<std::size_t, kPronounCategories> counts{};

  double operator[](PronounCategory c) const { return per_100_words[static_cast<std::size_t>(c)]; }
};

// Pooled: category tokens / all tokens x 100 over the whole corpus. Per-poem
// mean: the same rate per poem, averaged over poems with at least one token.
// Poems whose subject is in `exclude_subjects` are dropped first; throws
// Error if nothing is left.
PronounProfile pronoun_profile(const Corpus& corpus, const std::set<std::string>& exclude_subjects = {},
                               PronounNormalization mode = PronounNormalization::pooled);
PronounProfile pronoun_profile(std::span<const PronounCounts> per_poem,
                               PronounNormalization mode = PronounNormalization::pooled);

// Fixed English stopword list used for overall distinctive-word scoring.
std::string_view stopword_list_version();
std::span<const std::string_view> stopwords();
bool is_stopword(std::string_view token);

// A touchstone group is a list of words; an entry ending in '*' matches any
// token starting with the rest ("whisper*" covers whispers, whispered...).
using TouchstoneGroup = std::vector<std::string>;

bool matches_touchstone(std::string_view token, const TouchstoneGroup& group);

// Percentage of poems (0..100) containing at least one member, per group.
std::vector<double> touchstone_coverage(std::span<const std::vector<std::string>> poem_tokens,
                                        std::span<const TouchstoneGroup> groups);
std::vector<double> touchstone_coverage(const Corpus& corpus, std::span<const TouchstoneGroup> groups);

// Parses "embrace,grace,dance*,dream*" into a group.
TouchstoneGroup parse_touchstone_group(std::string_view spec);

}  // namespace poetics
