#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "poetics/corpus.hpp"
#include "poetics/lexical.hpp"
#include "poetics/logodds.hpp"
#include "poetics/meter.hpp"
#include "poetics/pronouncing.hpp"
#include "poetics/rhyme.hpp"
#include "poetics/structure.hpp"

namespace poetics {

inline constexpr std::string_view kToolVersion = "0.1.0";

// A table whose cells are JSON scalars; rendered as CSV or as an array of
// row objects.
struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::ordered_json>> rows;

  void write_csv(std::ostream& out) const;
  nlohmann::ordered_json to_json() const;
};

enum class OutputFormat { csv, json };

struct CorpusInput {
  std::filesystem::path path;
  std::optional<CorpusFormat> format;  // detected from the path when empty
  LoadDefaults defaults;
  std::optional<std::string> label;
};

struct AnalysisOptions {
  bool structure = true;  // lengths, quatrains, occupancy grids
  bool rhyme = true;
  bool meter = true;
  bool lexical = true;  // pronouns, touchstones
  bool compare = false;  // log-odds against the first corpus

  bool strip_prefatory = true;
  std::size_t grid_rows = kDefaultGridRows;
  std::size_t grid_cols = kDefaultGridCols;
  double iambic_threshold = kDefaultIambicThreshold;
  LogOddsOptions logodds;
  std::size_t top_k_words = 15;
  std::size_t top_k_first_words = 10;
  std::vector<TouchstoneGroup> touchstones;
  // Pronoun rates are also reported with poems on these subjects removed.
  std::set<std::string> excluded_subjects;

  std::size_t threads = 1;
};

std::vector<TouchstoneGroup> default_touchstone_groups();
// Every occasion and holiday subject from the prompt catalog.
std::set<std::string> occasion_and_holiday_subjects();

struct AnalysisReport {
  nlohmann::ordered_json metadata;
  std::vector<Table> tables;
  // name -> grid, e.g. "gpt4__all", "gpt4__sonnet"
  std::vector<std::pair<std::string, OccupancyGrid>> grids;
  std::vector<std::pair<std::string, LengthSummary>> length_boxes;  // "<corpus>__<style>"
  // corpus label -> one rhyme annotation per poem
  std::vector<std::pair<std::string, nlohmann::ordered_json>> rhyme_annotations;

  const Table* find(std::string_view name) const;
};

// Loads each input and applies prefatory stripping to human poems in fixed
// forms when enabled.
std::vector<Corpus> load_inputs(const std::vector<CorpusInput>& inputs, bool strip_prefatory);

// Runs every enabled analysis. `dict` is required when rhyme or meter is on.
AnalysisReport analyze(const std::vector<Corpus>& corpora, const Dictionary* dict, const AnalysisOptions& opts);

// Writes report.json, tables/, grids/, annotations/ and optionally plots/
// under `out_dir`. Output bytes depend only on the report contents.
void write_report(const AnalysisReport& report, const std::filesystem::path& out_dir, OutputFormat format,
                  bool emit_plots);

// Prints every table to `out` in the given format.
void print_tables(const AnalysisReport& report, std::ostream& out, OutputFormat format);

// Plot renderers used by --emit-plots.
std::string render_boxplot_svg(const std::vector<std::pair<std::string, LengthSummary>>& boxes,
                               const std::string& title);
std::string render_heatmap_svg(const OccupancyGrid& grid, const std::string& title);

std::string slug(std::string_view s);

}  // namespace poetics
