#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "poetics/corpus.hpp"

namespace poetics {

struct LogOddsResult {
  std::string word;
  double delta = 0.0;     // log-odds in A minus log-odds in B
  double variance = 0.0;
  double z = 0.0;         // delta / sqrt(variance); positive leans to A
  std::size_t count_a = 0;
  std::size_t count_b = 0;
  std::size_t doc_freq_a = 0;
  std::size_t doc_freq_b = 0;
};

// How the minimum-document filter is applied: to the two corpora pooled, or
// to each corpus separately.
enum class DocFrequencyFilter { pooled, each };

struct LogOddsOptions {
  std::size_t min_docs = 10;
  bool remove_stopwords = true;
  // Total prior mass. Defaults to alpha_scale x pooled vocabulary size.
  std::optional<double> alpha0;
  double alpha_scale = 0.01;
  DocFrequencyFilter filter = DocFrequencyFilter::pooled;
};

using Document = std::vector<std::string>;

// Weighted log-odds with an informative Dirichlet prior. With y the count of
// w in a corpus, n that corpus's token total, a0 the prior mass and
// a_w = a0 (y_A + y_B) / (n_A + n_B):
//   delta_w = log((y_A + a_w) / (n_A + a0 - y_A - a_w))
//           - log((y_B + a_w) / (n_B + a0 - y_B - a_w))
//   var_w   = 1 / (y_A + a_w) + 1 / (y_B + a_w)
//   z_w     = delta_w / sqrt(var_w)
// Counts and the prior use every feature; only the reported vocabulary is
// restricted by `min_docs`. Results are sorted by z descending, then word.
// Throws Error on an empty corpus or an empty filtered vocabulary.
std::vector<LogOddsResult> weighted_logodds(std::span<const Document> docs_a, std::span<const Document> docs_b,
                                            const LogOddsOptions& opts);

// Overall words: each poem's tokens, stopwords removed if requested.
std::vector<LogOddsResult> logodds(const Corpus& a, const Corpus& b, const LogOddsOptions& opts = {});

// Opening words: the feature of each poem is its first token; stopwords are
// always kept. Poems without tokens are skipped.
std::vector<LogOddsResult> first_word_logodds(const Corpus& a, const Corpus& b, const LogOddsOptions& opts = {});

void write_logodds_csv(std::ostream& out, std::span<const LogOddsResult> results);

}  // namespace poetics
