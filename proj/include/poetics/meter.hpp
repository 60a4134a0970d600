#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "poetics/corpus.hpp"
#include "poetics/pronouncing.hpp"
#include "poetics/structure.hpp"

namespace poetics {

// Per-syllable stress marks for one line:
//   '0' unstressed, '1' stressed (secondary stress folds here),
//   'x' monosyllable that may take either stress,
//   '?' syllable of an out-of-vocabulary word.
struct StressSequence {
  std::string digits;
  std::size_t line = 0;

  std::size_t resolvable() const;  // syllables other than '?'
};

// Vowel-letter groups (a, e, i, o, u, y), at least one for any word.
std::size_t estimate_syllables(std::string_view word);

StressSequence line_stress(std::string_view line, const Dictionary& dict, std::size_t index = 0);

// Fraction of positions agreeing with `pattern` repeated over the sequence.
// 'x' always agrees; '?' earns half credit.
double pattern_agreement(std::string_view stresses, std::string_view pattern);

inline double iambic_line_score(std::string_view stresses) { return pattern_agreement(stresses, "01"); }

inline constexpr double kDefaultIambicThreshold = 0.75;

struct MeterVerdict {
  double iambic_score = 0.0;
  bool dominant = false;
  std::vector<std::size_t> syllables_per_line;
  std::size_t scanned_lines = 0;  // lines with >= 2 resolvable syllables
};

// Mean iambic agreement over scannable lines. Throws Error("no scannable
// lines") when no line has two resolvable syllables.
MeterVerdict iambic_score(const PoemStructure& poem, const Dictionary& dict,
                          double threshold = kDefaultIambicThreshold);
MeterVerdict iambic_score(std::span<const StressSequence> lines, double threshold = kDefaultIambicThreshold);

struct MeterStats {
  std::size_t poems = 0;
  std::size_t scanned_poems = 0;
  std::size_t dominant_poems = 0;
  double pct_dominant_iambic = 0.0;  // over scanned poems, 0..100
  double mean_iambic_score = 0.0;
};

// Poems without scannable lines are counted in `poems` but excluded from the
// percentages.
MeterStats corpus_meter_stats(std::span<const std::optional<MeterVerdict>> verdicts);

}  // namespace poetics
