#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "poetics/catalog.hpp"

namespace poetics {

// Provenance of a poem. Serialized as "human", "gpt35", "gpt4", or
// "model:<name>" for any other generator.
struct Source {
  enum class Kind { human, gpt35, gpt4, other_model };
  Kind kind = Kind::human;
  std::string model;  // only for other_model

  bool is_generated() const { return kind != Kind::human; }
  std::string label() const;
  static std::optional<Source> parse(std::string_view s);

  friend bool operator==(const Source&, const Source&) = default;
};

struct PoemRecord {
  std::string id;
  std::string text;  // LF line breaks
  Source source;
  std::string style;
  std::optional<std::string> subject;
  std::optional<catalog::Template> prompt_template;
  std::optional<std::string> title;
};

struct Corpus {
  std::vector<PoemRecord> records;
  std::string label;

  bool empty() const { return records.empty(); }
  std::size_t size() const { return records.size(); }
};

enum class CorpusFormat { json_lines, csv, text_directory };

std::optional<CorpusFormat> parse_corpus_format(std::string_view s);

// Guesses from the path: directories are text directories, ".csv" is CSV,
// anything else is JSON Lines.
CorpusFormat detect_corpus_format(const std::filesystem::path& path);

// Fills fields the input does not carry. Text directories have no per-record
// metadata, so source (and template, for generated sources) come from here.
struct LoadDefaults {
  std::optional<Source> source;
  std::optional<std::string> style;
  std::optional<catalog::Template> prompt_template;
};

// Validates a record against the model's invariants; throws Error naming
// `where` on violation.
void validate_record(const PoemRecord& rec, std::string_view where);

Corpus load_corpus(const std::filesystem::path& path, CorpusFormat format,
                   const LoadDefaults& defaults = {});

Corpus parse_json_lines(std::string_view data, std::string_view origin,
                        const LoadDefaults& defaults = {});

Corpus parse_csv(std::string_view data, std::string_view origin, const LoadDefaults& defaults = {});

std::string to_json_line(const PoemRecord& rec);
void write_json_lines(std::ostream& out, const Corpus& corpus);

// Removes leading dedications, epigraph headers and dates from a poem that
// runs a little over its conventional length. Only acts when the poem has
// more non-blank lines than `expected_lines` but no more than ten extra.
// Idempotent.
PoemRecord strip_prefatory(const PoemRecord& poem, std::optional<std::size_t> expected_lines);

// Whether a single line looks like prefatory matter.
bool is_prefatory_line(std::string_view line);

// Conventional line counts for fixed forms ("sonnet" -> 14, ...).
std::optional<std::size_t> conventional_length(std::string_view style);

}  // namespace poetics
