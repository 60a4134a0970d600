#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "poetics/corpus.hpp"
#include "poetics/pronouncing.hpp"
#include "poetics/structure.hpp"

namespace poetics {

enum class RhymeScheme { AA, ABAB, ABBA, ABCB };

std::string_view to_string(RhymeScheme s);

struct SchemeMatch {
  RhymeScheme scheme;
  std::size_t start;  // 0-based index of the window's first line
  friend bool operator==(const SchemeMatch&, const SchemeMatch&) = default;
};

struct RhymeAnnotation {
  std::vector<std::string> end_words;  // "" when a line has no word
  std::vector<bool> rhymed;            // per line
  std::vector<SchemeMatch> schemes;    // in window order
  // Matched line pairs (0-based, first < second) from detected schemes, sorted, unique.
  std::vector<std::pair<std::size_t, std::size_t>> links;
  std::vector<std::string> oov_end_words;  // distinct, sorted
  double rhymed_fraction = 0.0;

  bool has_rhyme() const { return !schemes.empty(); }
};

// Last word of a line: the final token made of letters and apostrophes.
// Hyphenated endings yield their final segment.
std::optional<std::string> end_word(std::string_view line);

// True when some pronunciation of `a` and some pronunciation of `b` share a
// rhyming part. Out-of-vocabulary words never rhyme.
bool lines_rhyme(std::string_view a, std::string_view b, const Dictionary& dict);

// Scans every window start over the flattened non-blank lines:
//   AA   i~i+1
//   ABAB i~i+2 and i+1~i+3
//   ABBA i~i+3 and i+1~i+2
//   ABCB i+1~i+3, unless ABAB already holds for the window
// Lines bound by any matched pair are flagged as rhymed.
RhymeAnnotation annotate_rhymes(const PoemStructure& poem, const Dictionary& dict);

// Groups of end words linked by detected rhymes (connected components over
// `links`), each group sorted by first line.
std::vector<std::vector<std::string>> rhyme_groups(const RhymeAnnotation& ann);

nlohmann::ordered_json to_json(const RhymeAnnotation& ann);

struct RhymeStats {
  std::size_t poems = 0;
  std::size_t poems_with_rhyme = 0;
  std::size_t lines = 0;
  std::size_t rhymed_lines = 0;
  double poems_with_rhyme_pct = 0.0;  // 0..100
  double avg_rhymed_fraction = 0.0;   // unweighted mean of per-poem fractions
  double pooled_rhymed_fraction = 0.0;  // all rhymed lines / all lines
};

RhymeStats corpus_rhyme_stats(std::span<const RhymeAnnotation> annotations);
RhymeStats corpus_rhyme_stats(const Corpus& corpus, const Dictionary& dict);

}  // namespace poetics
