#include "poetics/structure.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <fmt/format.h>

#include "poetics/error.hpp"
#include "poetics/text.hpp"
#include "poetics/tokenizer.hpp"

namespace poetics {

PoemStructure parse_structure(std::string_view body) {
  PoemStructure out;
  std::size_t run = 0;
  for (auto line : text::split_lines(body)) {
    if (text::is_blank(line)) {
      if (run) out.stanza_sizes.push_back(run);
      run = 0;
      continue;
    }
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.lines.emplace_back(line);
    ++run;
  }
  if (run) out.stanza_sizes.push_back(run);
  if (out.lines.empty()) throw Error("empty poem");
  out.line_count = out.lines.size();
  out.word_count = tokenize(body).tokens.size();
  return out;
}

QuatrainStats quatrain_stats(std::span<const PoemStructure> poems) {
  QuatrainStats s;
  s.poems = poems.size();
  for (const auto& p : poems) {
    auto quatrains = static_cast<std::size_t>(std::count(p.stanza_sizes.begin(), p.stanza_sizes.end(), 4));
    s.stanzas += p.stanza_sizes.size();
    s.quatrain_stanzas += quatrains;
    if (quatrains) ++s.poems_with_quatrain;
  }
  if (s.poems) s.poems_with_quatrain_pct = 100.0 * s.poems_with_quatrain / s.poems;
  if (s.stanzas) s.quatrain_stanza_pct = 100.0 * s.quatrain_stanzas / s.stanzas;
  return s;
}

QuatrainStats quatrain_stats(const Corpus& corpus) {
  std::vector<PoemStructure> parsed;
  parsed.reserve(corpus.size());
  for (const auto& rec : corpus.records) parsed.push_back(parse_structure(rec));
  return quatrain_stats(parsed);
}

namespace {

double interpolated_quantile(const std::vector<double>& sorted, double p) {
  double pos = p * static_cast<double>(sorted.size() - 1);
  auto lo = static_cast<std::size_t>(std::floor(pos));
  auto hi = std::min(lo + 1, sorted.size() - 1);
  double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

}  // namespace

LengthSummary tukey_summary(std::vector<double> values) {
  if (values.empty()) throw Error("length summary of an empty set");
  std::sort(values.begin(), values.end());
  LengthSummary s;
  s.count = values.size();
  s.q1 = interpolated_quantile(values, 0.25);
  s.median = interpolated_quantile(values, 0.5);
  s.q3 = interpolated_quantile(values, 0.75);
  double iqr = s.q3 - s.q1;
  double lo_fence = s.q1 - 1.5 * iqr;
  double hi_fence = s.q3 + 1.5 * iqr;

  auto first_in = std::lower_bound(values.begin(), values.end(), lo_fence);
  auto last_in = std::upper_bound(values.begin(), values.end(), hi_fence);
  // The quartiles always lie inside the fences, so the inner range is non-empty.
  s.whisker_low = *first_in;
  s.whisker_high = *(last_in - 1);
  s.outliers.assign(values.begin(), first_in);
  s.outliers.insert(s.outliers.end(), last_in, values.end());
  return s;
}

LengthSummary length_summary(std::span<const std::size_t> line_counts) {
  if (line_counts.empty()) throw Error("length summary: no poems selected");
  return tukey_summary(std::vector<double>(line_counts.begin(), line_counts.end()));
}

LengthSummary length_summary(const Corpus& corpus, std::optional<std::string_view> style_filter) {
  std::vector<std::size_t> counts;
  for (const auto& rec : corpus.records) {
    if (style_filter && rec.style != *style_filter) continue;
    counts.push_back(parse_structure(rec).line_count);
  }
  if (counts.empty()) {
    throw Error(style_filter ? "length summary: no poems with style '" + std::string(*style_filter) + "'"
                             : std::string("length summary: corpus is empty"));
  }
  return length_summary(counts);
}

OccupancyGrid occupancy_heatmap(std::span<const std::string_view> texts, std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw Error("occupancy grid needs at least one row and one column");
  OccupancyGrid grid;
  grid.rows = rows;
  grid.cols = cols;
  grid.cells.assign(rows * cols, 0.0);
  if (texts.empty()) return grid;

  // Integer counts first so the mean does not depend on poem order.
  std::vector<std::size_t> hits(rows * cols, 0);
  for (auto body : texts) {
    auto lines = text::split_lines(body);
    for (std::size_t r = 0; r < rows && r < lines.size(); ++r) {
      auto expanded = text::expand_tabs(lines[r]);
      auto chars = text::utf8_chars(expanded);
      for (std::size_t c = 0; c < cols && c < chars.size(); ++c) {
        auto ch = chars[c];
        if (!(ch.size() == 1 && text::is_space(ch[0]))) ++hits[r * cols + c];
      }
    }
  }
  auto n = static_cast<double>(texts.size());
  for (std::size_t i = 0; i < hits.size(); ++i) grid.cells[i] = static_cast<double>(hits[i]) / n;
  return grid;
}

OccupancyGrid occupancy_heatmap(const Corpus& corpus, std::size_t rows, std::size_t cols) {
  std::vector<std::string_view> texts;
  texts.reserve(corpus.size());
  for (const auto& rec : corpus.records) texts.push_back(rec.text);
  return occupancy_heatmap(texts, rows, cols);
}

void write_grid_csv(std::ostream& out, const OccupancyGrid& grid) {
  for (std::size_t r = 0; r < grid.rows; ++r) {
    for (std::size_t c = 0; c < grid.cols; ++c) {
      if (c) out << ',';
      out << fmt::format("{:.6f}", grid.at(r, c));
    }
    out << '\n';
  }
}

}  // namespace poetics
