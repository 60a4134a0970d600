#include "poetics/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <regex>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "poetics/csv.hpp"
#include "poetics/error.hpp"
#include "poetics/text.hpp"

namespace poetics {

using nlohmann::json;

std::string Source::label() const {
  switch (kind) {
    case Kind::human: return "human";
    case Kind::gpt35: return "gpt35";
    case Kind::gpt4: return "gpt4";
    case Kind::other_model: return "model:" + model;
  }
  return "human";
}

std::optional<Source> Source::parse(std::string_view s) {
  if (s == "human") return Source{Kind::human, {}};
  if (s == "gpt35") return Source{Kind::gpt35, {}};
  if (s == "gpt4") return Source{Kind::gpt4, {}};
  if (s.starts_with("model:") && s.size() > 6) return Source{Kind::other_model, std::string(s.substr(6))};
  return std::nullopt;
}

std::optional<CorpusFormat> parse_corpus_format(std::string_view s) {
  if (s == "jsonl" || s == "json-lines") return CorpusFormat::json_lines;
  if (s == "csv") return CorpusFormat::csv;
  if (s == "dir" || s == "directory" || s == "text-dir") return CorpusFormat::text_directory;
  return std::nullopt;
}

CorpusFormat detect_corpus_format(const std::filesystem::path& path) {
  if (std::filesystem::is_directory(path)) return CorpusFormat::text_directory;
  if (text::ascii_lower(path.extension().string()) == ".csv") return CorpusFormat::csv;
  return CorpusFormat::json_lines;
}

void validate_record(const PoemRecord& rec, std::string_view where) {
  auto fail = [&](const std::string& msg) { throw Error(std::string(where) + ": " + msg); };
  if (rec.id.empty()) fail("empty id");
  if (text::trim_right(rec.text).empty()) fail("poem text is empty");
  if (rec.source.is_generated()) {
    if (!rec.prompt_template) fail("generated poem '" + rec.id + "' has no prompt template");
    if (!catalog::is_known_style(rec.style))
      fail("generated poem '" + rec.id + "' has unknown style '" + rec.style + "'");
  } else if (rec.prompt_template) {
    fail("human poem '" + rec.id + "' carries a prompt template");
  }
}

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string where(std::string_view origin, std::size_t line) {
  return std::string(origin) + ":" + std::to_string(line);
}

// Field accessor shared by the JSON and CSV front doors; nullopt when absent
// or empty.
using FieldGetter = std::function<std::optional<std::string>(std::string_view)>;

PoemRecord build_record(const FieldGetter& get, const std::string& loc, const std::string& fallback_id,
                        const LoadDefaults& defaults) {
  PoemRecord rec;
  auto text = get("text");
  if (!text) throw Error(loc + ": record has no text field");
  rec.text = text::normalize_newlines(*text);

  if (auto src = get("source")) {
    auto parsed = Source::parse(*src);
    if (!parsed) throw Error(loc + ": unknown source '" + *src + "'");
    rec.source = *parsed;
  } else if (defaults.source) {
    rec.source = *defaults.source;
  } else {
    throw Error(loc + ": record has no source field");
  }

  rec.id = get("id").value_or(fallback_id);
  rec.style = get("style").value_or(defaults.style.value_or(""));
  rec.subject = get("subject");
  rec.title = get("title");
  if (auto tpl = get("template")) {
    rec.prompt_template = catalog::parse_template(*tpl);
    if (!rec.prompt_template) throw Error(loc + ": unknown template '" + *tpl + "'");
  } else if (rec.source.is_generated()) {
    rec.prompt_template = defaults.prompt_template;
  }
  validate_record(rec, loc);
  return rec;
}

void add_unique(Corpus& corpus, std::unordered_set<std::string>& seen, PoemRecord rec,
                const std::string& loc) {
  if (!seen.insert(rec.id).second) throw Error(loc + ": duplicate id '" + rec.id + "'");
  corpus.records.push_back(std::move(rec));
}

std::string stem_of(std::string_view origin) {
  return std::filesystem::path(std::string(origin)).stem().string();
}

}  // namespace

Corpus parse_json_lines(std::string_view data, std::string_view origin, const LoadDefaults& defaults) {
  Corpus corpus;
  corpus.label = stem_of(origin);
  std::unordered_set<std::string> seen;
  auto lines = text::split_lines(data);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto line = text::trim(lines[i]);
    if (line.empty()) continue;
    auto loc = where(origin, i + 1);
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw Error(loc + ": malformed JSON record (" + e.what() + ")");
    }
    if (!obj.is_object()) throw Error(loc + ": record is not a JSON object");
    FieldGetter get = [&](std::string_view key) -> std::optional<std::string> {
      auto it = obj.find(std::string(key));
      if (it == obj.end() || it->is_null()) return std::nullopt;
      if (!it->is_string()) throw Error(loc + ": field '" + std::string(key) + "' is not a string");
      auto v = it->get<std::string>();
      if (v.empty()) return std::nullopt;
      return v;
    };
    add_unique(corpus, seen, build_record(get, loc, corpus.label + ":" + std::to_string(i + 1), defaults),
               loc);
  }
  return corpus;
}

Corpus parse_csv(std::string_view data, std::string_view origin, const LoadDefaults& defaults) {
  Corpus corpus;
  corpus.label = stem_of(origin);
  auto rows = csv::parse(data);
  if (rows.empty()) throw Error(std::string(origin) + ": missing CSV header row");
  std::map<std::string, std::size_t, std::less<>> columns;
  for (std::size_t i = 0; i < rows[0].fields.size(); ++i)
    columns[std::string(text::trim(rows[0].fields[i]))] = i;
  if (!columns.contains("text")) throw Error(std::string(origin) + ": CSV header has no 'text' column");

  std::unordered_set<std::string> seen;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    auto loc = where(origin, row.line);
    if (row.fields.size() != rows[0].fields.size())
      throw Error(loc + ": expected " + std::to_string(rows[0].fields.size()) + " fields, found " +
                  std::to_string(row.fields.size()));
    FieldGetter get = [&](std::string_view key) -> std::optional<std::string> {
      auto it = columns.find(key);
      if (it == columns.end()) return std::nullopt;
      const auto& v = row.fields[it->second];
      if (v.empty()) return std::nullopt;
      return v;
    };
    add_unique(corpus, seen, build_record(get, loc, corpus.label + ":" + std::to_string(r), defaults), loc);
  }
  return corpus;
}

Corpus load_corpus(const std::filesystem::path& path, CorpusFormat format, const LoadDefaults& defaults) {
  namespace fs = std::filesystem;
  if (!fs::exists(path)) throw Error("corpus path does not exist: " + path.string());
  switch (format) {
    case CorpusFormat::json_lines: return parse_json_lines(read_file(path), path.string(), defaults);
    case CorpusFormat::csv: return parse_csv(read_file(path), path.string(), defaults);
    case CorpusFormat::text_directory: break;
  }

  if (!fs::is_directory(path)) throw Error(path.string() + " is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(path)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  Corpus corpus;
  corpus.label = path.filename().empty() ? path.parent_path().filename().string() : path.filename().string();
  std::unordered_set<std::string> seen;
  for (const auto& file : files) {
    auto body = read_file(file);
    FieldGetter get = [&](std::string_view key) -> std::optional<std::string> {
      if (key == "text") return body;
      return std::nullopt;
    };
    add_unique(corpus, seen, build_record(get, file.string(), file.stem().string(), defaults), file.string());
  }
  return corpus;
}

std::string to_json_line(const PoemRecord& rec) {
  nlohmann::ordered_json obj;
  obj["id"] = rec.id;
  obj["text"] = rec.text;
  obj["source"] = rec.source.label();
  obj["style"] = rec.style;
  if (rec.subject) obj["subject"] = *rec.subject;
  if (rec.prompt_template) obj["template"] = std::string(catalog::to_string(*rec.prompt_template));
  if (rec.title) obj["title"] = *rec.title;
  return obj.dump(-1, ' ', false, json::error_handler_t::replace);
}

void write_json_lines(std::ostream& out, const Corpus& corpus) {
  for (const auto& rec : corpus.records) out << to_json_line(rec) << '\n';
}

bool is_prefatory_line(std::string_view raw) {
  static const std::regex kDate(
      R"(^((\d{1,2}\s+)?(jan(uary)?|feb(ruary)?|mar(ch)?|apr(il)?|may|june?|july?|aug(ust)?|sept?(ember)?|oct(ober)?|nov(ember)?|dec(ember)?)\.?(\s+\d{1,2}(st|nd|rd|th)?)?,?\s+)?\d{4}(\s*[-/]\s*\d{2,4})?\.?$|^\d{1,2}[/.-]\d{1,2}[/.-]\d{2,4}$)",
      std::regex::icase | std::regex::optimize);
  auto line = text::trim(raw);
  if (line.empty()) return false;
  if (line.back() == ':') return true;
  if (text::starts_with_icase(line, "for ") || text::starts_with_icase(line, "after ")) return true;
  return std::regex_match(line.begin(), line.end(), kDate);
}

PoemRecord strip_prefatory(const PoemRecord& poem, std::optional<std::size_t> expected_lines) {
  if (!expected_lines || *expected_lines == 0) return poem;
  auto lines = text::split_lines(poem.text);
  std::size_t count = std::count_if(lines.begin(), lines.end(), [](auto l) { return !text::is_blank(l); });
  if (count <= *expected_lines || count - *expected_lines > 10) return poem;

  std::size_t first = 0;
  std::size_t removed = 0;
  while (count > *expected_lines) {
    while (first < lines.size() && text::is_blank(lines[first])) ++first;
    if (first == lines.size() || !is_prefatory_line(lines[first])) break;
    ++first;
    --count;
    ++removed;
  }
  if (removed == 0) return poem;
  while (first < lines.size() && text::is_blank(lines[first])) ++first;

  PoemRecord out = poem;
  auto offset = static_cast<std::size_t>(lines[first].data() - poem.text.data());
  out.text = poem.text.substr(offset);
  return out;
}

std::optional<std::size_t> conventional_length(std::string_view style) {
  if (style == "sonnet") return 14;
  if (style == "villanelle") return 19;
  if (style == "sestina") return 39;
  if (style == "limerick") return 5;
  return std::nullopt;
}

}  // namespace poetics
