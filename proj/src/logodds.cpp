#include "poetics/logodds.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <set>

#include <fmt/format.h>

#include "poetics/csv.hpp"
#include "poetics/error.hpp"
#include "poetics/lexical.hpp"
#include "poetics/tokenizer.hpp"

namespace poetics {
namespace {

struct Tally {
  std::size_t count_a = 0, count_b = 0, docs_a = 0, docs_b = 0;
};

// Shared by both sides so that swapping A and B negates delta exactly.
double log_odds(double y, double n, double alpha_w, double alpha0, const std::string& word) {
  double num = y + alpha_w;
  double den = n + alpha0 - y - alpha_w;
  if (!(num > 0.0) || !(den > 0.0))
    throw Error("log-odds undefined for '" + word + "': it is the only feature in both corpora");
  return std::log(num / den);
}

}  // namespace

std::vector<LogOddsResult> weighted_logodds(std::span<const Document> docs_a, std::span<const Document> docs_b,
                                            const LogOddsOptions& opts) {
  if (docs_a.empty() || docs_b.empty()) throw Error("log-odds: both corpora must be non-empty");

  std::map<std::string, Tally> table;
  std::size_t n_a = 0, n_b = 0;
  for (const auto& doc : docs_a) {
    n_a += doc.size();
    for (const auto& w : doc) ++table[w].count_a;
    for (const auto& w : std::set<std::string>(doc.begin(), doc.end())) ++table[w].docs_a;
  }
  for (const auto& doc : docs_b) {
    n_b += doc.size();
    for (const auto& w : doc) ++table[w].count_b;
    for (const auto& w : std::set<std::string>(doc.begin(), doc.end())) ++table[w].docs_b;
  }

  const double alpha0 = opts.alpha0.value_or(opts.alpha_scale * static_cast<double>(table.size()));
  if (!(alpha0 > 0.0)) throw Error("log-odds: prior mass must be positive");
  const double total = static_cast<double>(n_a + n_b);

  std::vector<LogOddsResult> out;
  for (const auto& [word, t] : table) {
    bool keep = opts.filter == DocFrequencyFilter::pooled
                    ? t.docs_a + t.docs_b >= opts.min_docs
                    : t.docs_a >= opts.min_docs && t.docs_b >= opts.min_docs;
    if (!keep) continue;
    double ya = static_cast<double>(t.count_a);
    double yb = static_cast<double>(t.count_b);
    double alpha_w = alpha0 * (ya + yb) / total;

    LogOddsResult r;
    r.word = word;
    r.delta = log_odds(ya, static_cast<double>(n_a), alpha_w, alpha0, word) -
              log_odds(yb, static_cast<double>(n_b), alpha_w, alpha0, word);
    r.variance = 1.0 / (ya + alpha_w) + 1.0 / (yb + alpha_w);
    r.z = r.delta / std::sqrt(r.variance);
    r.count_a = t.count_a;
    r.count_b = t.count_b;
    r.doc_freq_a = t.docs_a;
    r.doc_freq_b = t.docs_b;
    out.push_back(std::move(r));
  }
  if (out.empty())
    throw Error("log-odds: no word appears in at least " + std::to_string(opts.min_docs) + " poems");
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.z != y.z) return x.z > y.z;
    return x.word < y.word;
  });
  return out;
}

namespace {

std::vector<Document> overall_documents(const Corpus& c, bool remove_stopwords) {
  std::vector<Document> docs;
  docs.reserve(c.size());
  for (const auto& rec : c.records) {
    auto tokens = tokens_of(rec.text);
    if (remove_stopwords) std::erase_if(tokens, [](const auto& t) { return is_stopword(t); });
    docs.push_back(std::move(tokens));
  }
  return docs;
}

std::vector<Document> first_word_documents(const Corpus& c) {
  std::vector<Document> docs;
  for (const auto& rec : c.records) {
    auto tokens = tokens_of(rec.text);
    if (!tokens.empty()) docs.push_back({tokens.front()});
  }
  return docs;
}

}  // namespace

std::vector<LogOddsResult> logodds(const Corpus& a, const Corpus& b, const LogOddsOptions& opts) {
  if (a.empty() || b.empty()) throw Error("log-odds: both corpora must be non-empty");
  return weighted_logodds(overall_documents(a, opts.remove_stopwords), overall_documents(b, opts.remove_stopwords),
                          opts);
}

std::vector<LogOddsResult> first_word_logodds(const Corpus& a, const Corpus& b, const LogOddsOptions& opts) {
  if (a.empty() || b.empty()) throw Error("log-odds: both corpora must be non-empty");
  return weighted_logodds(first_word_documents(a), first_word_documents(b), opts);
}

void write_logodds_csv(std::ostream& out, std::span<const LogOddsResult> results) {
  csv::write_row(out, {"word", "delta", "variance", "z", "doc_freq_a", "doc_freq_b"});
  for (const auto& r : results) {
    csv::write_row(out, {r.word, fmt::format("{:.10g}", r.delta), fmt::format("{:.10g}", r.variance),
                         fmt::format("{:.10g}", r.z), std::to_string(r.doc_freq_a), std::to_string(r.doc_freq_b)});
  }
}

}  // namespace poetics
