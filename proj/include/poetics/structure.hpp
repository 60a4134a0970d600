#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "poetics/corpus.hpp"

namespace poetics {

struct PoemStructure {
  std::vector<std::string> lines;        // non-blank lines, in order
  std::vector<std::size_t> stanza_sizes;  // runs of non-blank lines
  std::size_t line_count = 0;
  std::size_t word_count = 0;
};

// A stanza is a maximal run of non-blank lines; blank lines only separate.
// Throws Error("empty poem") if every line is blank.
PoemStructure parse_structure(std::string_view text);
inline PoemStructure parse_structure(const PoemRecord& poem) { return parse_structure(poem.text); }

struct QuatrainStats {
  std::size_t poems = 0;
  std::size_t poems_with_quatrain = 0;
  std::size_t stanzas = 0;
  std::size_t quatrain_stanzas = 0;
  double poems_with_quatrain_pct = 0.0;  // 0..100
  double quatrain_stanza_pct = 0.0;      // 0..100
};

QuatrainStats quatrain_stats(std::span<const PoemStructure> poems);
QuatrainStats quatrain_stats(const Corpus& corpus);

// Tukey box-plot summary. Quartiles use linear interpolation between order
// statistics (position (n-1)p). Whiskers sit on the most extreme data points
// inside the 1.5 IQR fences; everything beyond them is an outlier.
struct LengthSummary {
  std::size_t count = 0;
  double median = 0.0;
  double q1 = 0.0;
  double q3 = 0.0;
  double whisker_low = 0.0;
  double whisker_high = 0.0;
  std::vector<double> outliers;  // ascending

  friend bool operator==(const LengthSummary&, const LengthSummary&) = default;
};

LengthSummary tukey_summary(std::vector<double> values);

// Summary of non-blank line counts, optionally restricted to one style.
// Throws Error if no poem matches.
LengthSummary length_summary(const Corpus& corpus, std::optional<std::string_view> style_filter = {});
LengthSummary length_summary(std::span<const std::size_t> line_counts);

struct OccupancyGrid {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> cells;  // row-major, rows x cols, each in [0,1]

  double at(std::size_t r, std::size_t c) const { return cells[r * cols + c]; }
};

inline constexpr std::size_t kDefaultGridRows = 60;
inline constexpr std::size_t kDefaultGridCols = 80;

// Cell (i,j) of one poem is 1 when raw line i (blank lines included) has a
// non-whitespace character at code-point column j after each tab is replaced
// by four spaces. The grid is the per-cell mean over poems.
OccupancyGrid occupancy_heatmap(std::span<const std::string_view> texts, std::size_t rows, std::size_t cols);
OccupancyGrid occupancy_heatmap(const Corpus& corpus, std::size_t rows = kDefaultGridRows,
                                std::size_t cols = kDefaultGridCols);

void write_grid_csv(std::ostream& out, const OccupancyGrid& grid);

}  // namespace poetics
