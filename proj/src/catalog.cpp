#include "poetics/catalog.hpp"

#include <algorithm>
#include <array>

namespace poetics::catalog {
namespace {

constexpr std::array<Template, 3> kTemplates{Template::general, Template::figurative,
                                             Template::specific};

constexpr std::array<std::string_view, 24> kStyles{
    // fixed forms
    "limerick", "pantoum", "ghazal", "ballad", "villanelle", "sonnet", "sestina", "haiku",
    // unfixed forms
    "monologue", "ars poetica", "aubade", "pastoral", "ode", "elegy", "visual poetry",
    "ekphrasis", "prose poem",
    // meters
    "common measure", "blank verse", "free verse",
    // stanza forms
    "quatrain", "tercet", "couplet",
    // generic
    "a poem"};

constexpr std::array<std::string_view, 9> kGeneral{
    "activities", "arts & sciences", "living", "love", "mythology & folklore",
    "nature", "religion", "relationships", "social commentaries"};

constexpr std::array<std::string_view, 11> kOccasions{
    "anniversary", "birth", "birthdays", "engagement", "farewells & good luck",
    "funerals", "get well & recovery", "graduation", "gratitude & apologies",
    "toasts & celebrations", "weddings"};

constexpr std::array<std::string_view, 20> kHolidays{
    "cinco de mayo", "christmas", "easter", "father's day", "halloween", "hanukkah",
    "independence day", "kwanzaa", "labor day", "memorial day", "mother's day",
    "new year", "passover", "ramadan", "rosh hashanah", "september 11th",
    "st. patrick's day", "thanksgiving", "valentine's day", "yom kippur"};

constexpr auto kSubjects = [] {
  std::array<std::string_view, kGeneral.size() + kOccasions.size() + kHolidays.size()> all{};
  std::size_t i = 0;
  for (auto s : kGeneral) all[i++] = s;
  for (auto s : kOccasions) all[i++] = s;
  for (auto s : kHolidays) all[i++] = s;
  return all;
}();

static_assert(kSubjects.size() == 40);

template <std::size_t N>
bool contains(const std::array<std::string_view, N>& arr, std::string_view s) {
  return std::find(arr.begin(), arr.end(), s) != arr.end();
}

}  // namespace

std::string_view to_string(Template t) {
  switch (t) {
    case Template::general: return "general";
    case Template::figurative: return "figurative";
    case Template::specific: return "specific";
  }
  return "general";
}

std::optional<Template> parse_template(std::string_view s) {
  for (auto t : kTemplates)
    if (to_string(t) == s) return t;
  return std::nullopt;
}

std::span<const Template> all_templates() { return kTemplates; }

std::span<const std::string_view> styles() { return kStyles; }

bool is_known_style(std::string_view style) { return contains(kStyles, style); }

std::span<const std::string_view> subjects() { return kSubjects; }

std::optional<SubjectGroup> subject_group(std::string_view subject) {
  if (contains(kGeneral, subject)) return SubjectGroup::general;
  if (contains(kOccasions, subject)) return SubjectGroup::occasion;
  if (contains(kHolidays, subject)) return SubjectGroup::holiday;
  return std::nullopt;
}

}  // namespace poetics::catalog
