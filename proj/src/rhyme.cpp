#include "poetics/rhyme.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "poetics/stats.hpp"
#include "poetics/tokenizer.hpp"

namespace poetics {

std::string_view to_string(RhymeScheme s) {
  switch (s) {
    case RhymeScheme::AA: return "AA";
    case RhymeScheme::ABAB: return "ABAB";
    case RhymeScheme::ABBA: return "ABBA";
    case RhymeScheme::ABCB: return "ABCB";
  }
  return "AA";
}

std::optional<std::string> end_word(std::string_view line) {
  auto tokens = tokens_of(line);
  for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) {
    bool letters_only = std::none_of(it->begin(), it->end(), [](char c) { return c >= '0' && c <= '9'; });
    if (letters_only) return *it;
  }
  return std::nullopt;
}

namespace {

std::vector<RhymePart> rhyme_parts(const PronunciationEntry& entry) {
  std::vector<RhymePart> parts;
  for (const auto& v : entry.variants) {
    if (std::none_of(v.begin(), v.end(), [](const auto& p) { return is_vowel(p); })) continue;
    auto part = rhyme_part(v);
    if (std::find(parts.begin(), parts.end(), part) == parts.end()) parts.push_back(std::move(part));
  }
  return parts;
}

bool share_part(const std::vector<RhymePart>& a, const std::vector<RhymePart>& b) {
  for (const auto& x : a)
    for (const auto& y : b)
      if (x == y) return true;
  return false;
}

}  // namespace

bool lines_rhyme(std::string_view a, std::string_view b, const Dictionary& dict) {
  const auto* ea = dict.lookup(a);
  const auto* eb = dict.lookup(b);
  if (!ea || !eb) return false;
  return share_part(rhyme_parts(*ea), rhyme_parts(*eb));
}

RhymeAnnotation annotate_rhymes(const PoemStructure& poem, const Dictionary& dict) {
  RhymeAnnotation ann;
  const std::size_t n = poem.lines.size();
  ann.end_words.resize(n);
  ann.rhymed.assign(n, false);

  std::vector<std::vector<RhymePart>> parts(n);
  std::set<std::string> oov;
  for (std::size_t i = 0; i < n; ++i) {
    auto w = end_word(poem.lines[i]);
    if (!w) continue;
    ann.end_words[i] = *w;
    if (const auto* entry = dict.lookup(*w))
      parts[i] = rhyme_parts(*entry);
    else
      oov.insert(*w);
  }
  ann.oov_end_words.assign(oov.begin(), oov.end());

  auto rhymes = [&](std::size_t x, std::size_t y) { return share_part(parts[x], parts[y]); };
  std::set<std::pair<std::size_t, std::size_t>> links;
  auto bind = [&](std::size_t x, std::size_t y) {
    ann.rhymed[x] = ann.rhymed[y] = true;
    links.emplace(x, y);
  };

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (rhymes(i, i + 1)) {
      ann.schemes.push_back({RhymeScheme::AA, i});
      bind(i, i + 1);
    }
    if (i + 3 >= n) continue;
    bool abab = rhymes(i, i + 2) && rhymes(i + 1, i + 3);
    if (abab) {
      ann.schemes.push_back({RhymeScheme::ABAB, i});
      bind(i, i + 2);
      bind(i + 1, i + 3);
    }
    if (rhymes(i, i + 3) && rhymes(i + 1, i + 2)) {
      ann.schemes.push_back({RhymeScheme::ABBA, i});
      bind(i, i + 3);
      bind(i + 1, i + 2);
    }
    if (!abab && rhymes(i + 1, i + 3)) {
      ann.schemes.push_back({RhymeScheme::ABCB, i});
      bind(i + 1, i + 3);
    }
  }
  ann.links.assign(links.begin(), links.end());
  auto flagged = static_cast<std::size_t>(std::count(ann.rhymed.begin(), ann.rhymed.end(), true));
  ann.rhymed_fraction = n ? static_cast<double>(flagged) / static_cast<double>(n) : 0.0;
  return ann;
}

std::vector<std::vector<std::string>> rhyme_groups(const RhymeAnnotation& ann) {
  const std::size_t n = ann.end_words.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : ann.links) {
    auto ra = find(a), rb = find(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::map<std::size_t, std::vector<std::string>> groups;
  for (std::size_t i = 0; i < n; ++i) {
    if (!ann.rhymed[i]) continue;
    auto& g = groups[find(i)];
    if (std::find(g.begin(), g.end(), ann.end_words[i]) == g.end()) g.push_back(ann.end_words[i]);
  }
  std::vector<std::vector<std::string>> out;
  for (auto& [_, g] : groups) out.push_back(std::move(g));
  return out;
}

nlohmann::ordered_json to_json(const RhymeAnnotation& ann) {
  nlohmann::ordered_json j;
  j["end_words"] = ann.end_words;
  j["rhymed"] = ann.rhymed;
  auto schemes = nlohmann::ordered_json::array();
  for (const auto& m : ann.schemes) {
    nlohmann::ordered_json s;
    s["scheme"] = std::string(to_string(m.scheme));
    s["start_line"] = m.start + 1;
    schemes.push_back(std::move(s));
  }
  j["schemes"] = std::move(schemes);
  auto links = nlohmann::ordered_json::array();
  for (auto [a, b] : ann.links) links.push_back({a + 1, b + 1});
  j["links"] = std::move(links);
  j["groups"] = rhyme_groups(ann);
  j["oov_end_words"] = ann.oov_end_words;
  j["rhymed_fraction"] = ann.rhymed_fraction;
  return j;
}

RhymeStats corpus_rhyme_stats(std::span<const RhymeAnnotation> annotations) {
  RhymeStats s;
  s.poems = annotations.size();
  std::vector<double> fractions;
  fractions.reserve(annotations.size());
  for (const auto& a : annotations) {
    if (a.has_rhyme()) ++s.poems_with_rhyme;
    s.lines += a.rhymed.size();
    s.rhymed_lines += static_cast<std::size_t>(std::count(a.rhymed.begin(), a.rhymed.end(), true));
    fractions.push_back(a.rhymed_fraction);
  }
  if (s.poems) s.poems_with_rhyme_pct = 100.0 * s.poems_with_rhyme / s.poems;
  s.avg_rhymed_fraction = order_free_mean(std::move(fractions));
  if (s.lines) s.pooled_rhymed_fraction = static_cast<double>(s.rhymed_lines) / s.lines;
  return s;
}

RhymeStats corpus_rhyme_stats(const Corpus& corpus, const Dictionary& dict) {
  std::vector<RhymeAnnotation> anns;
  anns.reserve(corpus.size());
  for (const auto& rec : corpus.records) anns.push_back(annotate_rhymes(parse_structure(rec), dict));
  return corpus_rhyme_stats(anns);
}

}  // namespace poetics
