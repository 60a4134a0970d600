#include "poetics/meter.hpp"

#include <algorithm>

#include "poetics/error.hpp"
#include "poetics/stats.hpp"
#include "poetics/tokenizer.hpp"

namespace poetics {

std::size_t StressSequence::resolvable() const {
  return static_cast<std::size_t>(std::count_if(digits.begin(), digits.end(), [](char c) { return c != '?'; }));
}

std::size_t estimate_syllables(std::string_view word) {
  auto vowel = [](char c) {
    switch (c) {
      case 'a': case 'e': case 'i': case 'o': case 'u': case 'y':
      case 'A': case 'E': case 'I': case 'O': case 'U': case 'Y':
        return true;
      default:
        return false;
    }
  };
  std::size_t groups = 0;
  bool in_group = false;
  for (char c : word) {
    bool v = vowel(c);
    if (v && !in_group) ++groups;
    in_group = v;
  }
  return std::max<std::size_t>(groups, 1);
}

StressSequence line_stress(std::string_view line, const Dictionary& dict, std::size_t index) {
  StressSequence seq;
  seq.line = index;
  for (const auto& word : tokens_of(line)) {
    const auto* entry = dict.lookup(word);
    if (!entry) {
      seq.digits.append(estimate_syllables(word), '?');
      continue;
    }
    auto pattern = stress_pattern(entry->variants.front());
    if (pattern.size() == 1) {
      seq.digits.push_back('x');
      continue;
    }
    for (char d : pattern) seq.digits.push_back(d == '0' ? '0' : '1');
  }
  return seq;
}

double pattern_agreement(std::string_view stresses, std::string_view pattern) {
  if (stresses.empty() || pattern.empty()) return 0.0;
  // Half-credit units keep the sum integral.
  std::size_t halves = 0;
  for (std::size_t i = 0; i < stresses.size(); ++i) {
    char s = stresses[i];
    if (s == 'x' || s == pattern[i % pattern.size()])
      halves += 2;
    else if (s == '?')
      halves += 1;
  }
  return static_cast<double>(halves) / static_cast<double>(2 * stresses.size());
}

MeterVerdict iambic_score(std::span<const StressSequence> lines, double threshold) {
  MeterVerdict v;
  std::vector<double> scores;
  for (const auto& seq : lines) {
    v.syllables_per_line.push_back(seq.digits.size());
    if (seq.resolvable() < 2) continue;
    scores.push_back(iambic_line_score(seq.digits));
  }
  if (scores.empty()) throw Error("no scannable lines");
  v.scanned_lines = scores.size();
  v.iambic_score = order_free_mean(std::move(scores));
  v.dominant = v.iambic_score >= threshold;
  return v;
}

MeterVerdict iambic_score(const PoemStructure& poem, const Dictionary& dict, double threshold) {
  std::vector<StressSequence> lines;
  lines.reserve(poem.lines.size());
  for (std::size_t i = 0; i < poem.lines.size(); ++i) lines.push_back(line_stress(poem.lines[i], dict, i));
  return iambic_score(lines, threshold);
}

MeterStats corpus_meter_stats(std::span<const std::optional<MeterVerdict>> verdicts) {
  MeterStats s;
  s.poems = verdicts.size();
  std::vector<double> scores;
  for (const auto& v : verdicts) {
    if (!v) continue;
    ++s.scanned_poems;
    if (v->dominant) ++s.dominant_poems;
    scores.push_back(v->iambic_score);
  }
  if (s.scanned_poems) s.pct_dominant_iambic = 100.0 * s.dominant_poems / s.scanned_poems;
  s.mean_iambic_score = order_free_mean(std::move(scores));
  return s;
}

}  // namespace poetics
