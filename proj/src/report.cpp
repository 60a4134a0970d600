#include "poetics/report.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "poetics/catalog.hpp"
#include "poetics/csv.hpp"
#include "poetics/error.hpp"
#include "poetics/parallel.hpp"
#include "poetics/tokenizer.hpp"

namespace poetics {

using ojson = nlohmann::ordered_json;

namespace {

std::string format_cell(const ojson& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return fmt::format("{:.6f}", v.get<double>());
  if (v.is_null()) return "";
  return v.dump();
}

}  // namespace

void Table::write_csv(std::ostream& out) const {
  csv::write_row(out, columns);
  for (const auto& row : rows) {
    std::vector<std::string> cells;
    cells.reserve(row.size());
    for (const auto& v : row) cells.push_back(format_cell(v));
    csv::write_row(out, cells);
  }
}

ojson Table::to_json() const {
  auto arr = ojson::array();
  for (const auto& row : rows) {
    ojson obj;
    for (std::size_t i = 0; i < columns.size(); ++i) obj[columns[i]] = row[i];
    arr.push_back(std::move(obj));
  }
  return arr;
}

const Table* AnalysisReport::find(std::string_view name) const {
  for (const auto& t : tables)
    if (t.name == name) return &t;
  return nullptr;
}

std::vector<TouchstoneGroup> default_touchstone_groups() {
  return {{"embrace*", "grace", "dance*", "dream*"}, {"echo*", "whisper*"}};
}

std::set<std::string> occasion_and_holiday_subjects() {
  std::set<std::string> out;
  for (auto s : catalog::subjects()) {
    auto g = catalog::subject_group(s);
    if (g && *g != catalog::SubjectGroup::general) out.emplace(s);
  }
  return out;
}

std::string slug(std::string_view s) {
  std::string out;
  for (char c : s) {
    if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9'))
      out.push_back(c);
    else if (c >= 'A' && c <= 'Z')
      out.push_back(static_cast<char>(c + 32));
    else if (!out.empty() && out.back() != '-')
      out.push_back('-');
  }
  while (!out.empty() && out.back() == '-') out.pop_back();
  return out.empty() ? "x" : out;
}

std::vector<Corpus> load_inputs(const std::vector<CorpusInput>& inputs, bool strip_prefatory) {
  std::vector<Corpus> out;
  std::set<std::string> labels;
  for (const auto& in : inputs) {
    auto corpus = load_corpus(in.path, in.format.value_or(detect_corpus_format(in.path)), in.defaults);
    if (in.label) corpus.label = *in.label;
    if (!labels.insert(corpus.label).second)
      throw Error("two corpora share the label '" + corpus.label + "'; pass distinct labels");
    if (corpus.empty()) throw Error("corpus " + in.path.string() + " has no poems");
    if (strip_prefatory) {
      for (auto& rec : corpus.records) {
        if (rec.source.is_generated()) continue;
        rec = poetics::strip_prefatory(rec, conventional_length(rec.style));
      }
    }
    out.push_back(std::move(corpus));
  }
  return out;
}

namespace {

struct PoemAnalysis {
  PoemStructure structure;
  std::optional<RhymeAnnotation> rhyme;
  std::optional<MeterVerdict> meter;
  std::vector<std::string> tokens;
  PronounCounts pronouns;
};

PoemAnalysis analyze_poem(const PoemRecord& rec, const Dictionary* dict, const AnalysisOptions& opts) {
  PoemAnalysis a;
  try {
    a.structure = parse_structure(rec);
  } catch (const Error& e) {
    throw Error("poem '" + rec.id + "': " + e.what());
  }
  if (opts.rhyme) a.rhyme = annotate_rhymes(a.structure, *dict);
  if (opts.meter) {
    try {
      a.meter = iambic_score(a.structure, *dict, opts.iambic_threshold);
    } catch (const Error&) {
      // no scannable lines; counted but not scored
    }
  }
  a.tokens = tokens_of(rec.text);
  a.pronouns = count_pronouns(a.tokens);
  return a;
}

// "all" first, then styles in sorted order.
std::vector<std::string> style_groups(const Corpus& c) {
  std::set<std::string> styles;
  for (const auto& r : c.records) styles.insert(r.style.empty() ? "unspecified" : r.style);
  std::vector<std::string> out{"all"};
  out.insert(out.end(), styles.begin(), styles.end());
  return out;
}

std::vector<std::size_t> members(const Corpus& c, const std::string& style) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < c.records.size(); ++i) {
    const auto& s = c.records[i].style.empty() ? std::string("unspecified") : c.records[i].style;
    if (style == "all" || s == style) idx.push_back(i);
  }
  return idx;
}

std::string sources_of(const Corpus& c, const std::vector<std::size_t>& idx) {
  std::set<std::string> labels;
  for (auto i : idx) labels.insert(c.records[i].source.label());
  std::string out;
  for (const auto& l : labels) out += (out.empty() ? "" : "+") + l;
  return out;
}

ojson options_json(const AnalysisOptions& o) {
  ojson j;
  ojson enabled = ojson::array();
  if (o.structure) enabled.push_back("structure");
  if (o.rhyme) enabled.push_back("rhyme");
  if (o.meter) enabled.push_back("meter");
  if (o.lexical) enabled.push_back("lexical");
  if (o.compare) enabled.push_back("compare");
  j["analyses"] = enabled;
  j["strip_prefatory"] = o.strip_prefatory;
  j["grid_rows"] = o.grid_rows;
  j["grid_cols"] = o.grid_cols;
  j["iambic_threshold"] = o.iambic_threshold;
  j["min_docs"] = o.logodds.min_docs;
  j["doc_filter"] = o.logodds.filter == DocFrequencyFilter::pooled ? "pooled" : "each";
  if (o.logodds.alpha0)
    j["alpha0"] = *o.logodds.alpha0;
  else
    j["alpha_scale"] = o.logodds.alpha_scale;
  j["top_k_words"] = o.top_k_words;
  j["top_k_first_words"] = o.top_k_first_words;
  j["stopword_list"] = std::string(stopword_list_version());
  ojson groups = ojson::array();
  for (const auto& g : o.touchstones) groups.push_back(g);
  j["touchstones"] = groups;
  j["excluded_subjects"] = o.excluded_subjects;
  return j;
}

void add_logodds_rows(Table& t, const std::string& a, const std::string& b,
                      const std::vector<LogOddsResult>& results, std::size_t k) {
  auto emit = [&](const LogOddsResult& r, const std::string& favors, std::size_t rank) {
    t.rows.push_back({a, b, "all", favors, rank, r.word, r.delta, r.variance, r.z, r.doc_freq_a, r.doc_freq_b});
  };
  std::size_t rank = 0;
  for (const auto& r : results) {
    if (rank == k || r.z <= 0.0) break;
    emit(r, a, ++rank);
  }
  rank = 0;
  for (auto it = results.rbegin(); it != results.rend(); ++it) {
    if (rank == k || it->z >= 0.0) break;
    emit(*it, b, ++rank);
  }
}

}  // namespace

AnalysisReport analyze(const std::vector<Corpus>& corpora, const Dictionary* dict, const AnalysisOptions& opts) {
  if (corpora.empty()) throw Error("no corpora to analyze");
  if ((opts.rhyme || opts.meter) && !dict) throw Error("rhyme and meter analysis need a pronouncing dictionary");

  AnalysisReport report;
  auto& meta = report.metadata;
  meta["tool"] = "poetics";
  meta["version"] = std::string(kToolVersion);
  if (dict) {
    meta["dictionary_sha256"] = dict->checksum();
    meta["dictionary_entries"] = dict->size();
  } else {
    meta["dictionary_sha256"] = nullptr;
  }
  meta["options"] = options_json(opts);
  ojson corpora_meta = ojson::array();
  for (const auto& c : corpora) corpora_meta.push_back({{"label", c.label}, {"poems", c.size()}});
  meta["corpora"] = corpora_meta;

  Table lengths{"lengths",
                {"corpus", "source", "style", "poems", "median", "q1", "q3", "whisker_low", "whisker_high", "outliers"},
                {}};
  Table quatrains{"quatrains",
                  {"corpus", "source", "style", "poems", "poems_with_quatrain", "poems_with_quatrain_pct", "stanzas",
                   "quatrain_stanzas", "quatrain_stanza_pct"},
                  {}};
  Table rhyme{"rhyme",
              {"corpus", "source", "style", "poems", "poems_with_rhyme", "poems_with_rhyme_pct", "avg_rhymed_fraction",
               "pooled_rhymed_fraction"},
              {}};
  Table meter{"meter",
              {"corpus", "source", "style", "poems", "scanned_poems", "pct_dominant_iambic", "mean_iambic_score"},
              {}};
  std::vector<std::string> pronoun_cols{"corpus", "source", "style", "subset", "poems", "tokens"};
  for (auto c : all_pronoun_categories()) pronoun_cols.emplace_back(to_string(c));
  Table pronouns{"pronouns", pronoun_cols, {}};
  Table touchstones{"touchstones", {"corpus", "source", "style", "group", "pct_poems"}, {}};

  for (const auto& corpus : corpora) {
    auto per_poem = parallel_map(corpus.size(), opts.threads,
                                 [&](std::size_t i) { return analyze_poem(corpus.records[i], dict, opts); });

    if (opts.rhyme) {
      ojson lines = ojson::array();
      for (std::size_t i = 0; i < per_poem.size(); ++i) {
        ojson row;
        row["id"] = corpus.records[i].id;
        const ojson annotation = to_json(*per_poem[i].rhyme);
        for (const auto& [k, v] : annotation.items()) row[k] = v;
        lines.push_back(std::move(row));
      }
      report.rhyme_annotations.emplace_back(corpus.label, std::move(lines));
    }

    for (const auto& style : style_groups(corpus)) {
      auto idx = members(corpus, style);
      auto src = sources_of(corpus, idx);
      const auto n = idx.size();

      if (opts.structure) {
        std::vector<std::size_t> counts;
        std::vector<PoemStructure> structures;
        std::vector<std::string_view> texts;
        for (auto i : idx) {
          counts.push_back(per_poem[i].structure.line_count);
          structures.push_back(per_poem[i].structure);
          texts.push_back(corpus.records[i].text);
        }
        auto box = length_summary(counts);
        std::string outliers;
        for (double o : box.outliers) outliers += (outliers.empty() ? "" : " ") + fmt::format("{}", o);
        lengths.rows.push_back(
            {corpus.label, src, style, n, box.median, box.q1, box.q3, box.whisker_low, box.whisker_high, outliers});
        report.length_boxes.emplace_back(corpus.label + "__" + style, box);

        auto q = quatrain_stats(structures);
        quatrains.rows.push_back({corpus.label, src, style, n, q.poems_with_quatrain, q.poems_with_quatrain_pct,
                                  q.stanzas, q.quatrain_stanzas, q.quatrain_stanza_pct});
        report.grids.emplace_back(slug(corpus.label) + "__" + slug(style),
                                  occupancy_heatmap(texts, opts.grid_rows, opts.grid_cols));
      }
      if (opts.rhyme) {
        std::vector<RhymeAnnotation> anns;
        for (auto i : idx) anns.push_back(*per_poem[i].rhyme);
        auto s = corpus_rhyme_stats(anns);
        rhyme.rows.push_back({corpus.label, src, style, n, s.poems_with_rhyme, s.poems_with_rhyme_pct,
                              s.avg_rhymed_fraction, s.pooled_rhymed_fraction});
      }
      if (opts.meter) {
        std::vector<std::optional<MeterVerdict>> verdicts;
        for (auto i : idx) verdicts.push_back(per_poem[i].meter);
        auto s = corpus_meter_stats(verdicts);
        meter.rows.push_back({corpus.label, src, style, n, s.scanned_poems, s.pct_dominant_iambic, s.mean_iambic_score});
      }
      if (opts.lexical) {
        auto pronoun_row = [&](const std::string& subset, const std::vector<std::size_t>& which) {
          std::vector<PronounCounts> counts;
          for (auto i : which) counts.push_back(per_poem[i].pronouns);
          auto p = pronoun_profile(counts);
          std::vector<ojson> row{corpus.label, src, style, subset, which.size(), p.tokens};
          for (double v : p.per_100_words) row.emplace_back(v);
          pronouns.rows.push_back(std::move(row));
        };
        pronoun_row("all", idx);
        if (style == "all" && !opts.excluded_subjects.empty()) {
          std::vector<std::size_t> kept;
          for (auto i : idx) {
            const auto& subj = corpus.records[i].subject;
            if (!(subj && opts.excluded_subjects.contains(*subj))) kept.push_back(i);
          }
          if (!kept.empty() && kept.size() != idx.size()) pronoun_row("excluding_subjects", kept);
        }

        std::vector<std::vector<std::string>> tokens;
        for (auto i : idx) tokens.push_back(per_poem[i].tokens);
        auto cov = touchstone_coverage(tokens, opts.touchstones);
        for (std::size_t g = 0; g < cov.size(); ++g) {
          std::string name;
          for (const auto& w : opts.touchstones[g]) name += (name.empty() ? "" : ",") + w;
          touchstones.rows.push_back({corpus.label, src, style, name, cov[g]});
        }
      }
    }
  }

  if (opts.structure) {
    report.tables.push_back(std::move(lengths));
    report.tables.push_back(std::move(quatrains));
  }
  if (opts.rhyme) report.tables.push_back(std::move(rhyme));
  if (opts.meter) report.tables.push_back(std::move(meter));
  if (opts.lexical) {
    report.tables.push_back(std::move(pronouns));
    report.tables.push_back(std::move(touchstones));
  }

  if (opts.compare) {
    if (corpora.size() < 2) throw Error("--compare needs at least two corpora");
    std::vector<std::string> cols{"corpus_a", "corpus_b", "style", "favors", "rank", "word",
                                  "delta", "variance", "z", "doc_freq_a", "doc_freq_b"};
    Table words{"logodds", cols, {}};
    Table first{"first_words", cols, {}};
    const auto& base = corpora.front();
    for (std::size_t i = 1; i < corpora.size(); ++i) {
      const auto& other = corpora[i];
      add_logodds_rows(words, other.label, base.label, logodds(other, base, opts.logodds), opts.top_k_words);
      add_logodds_rows(first, other.label, base.label, first_word_logodds(other, base, opts.logodds),
                       opts.top_k_first_words);
    }
    report.tables.push_back(std::move(words));
    report.tables.push_back(std::move(first));
  }

  ojson families = ojson::array();
  for (const auto& t : report.tables) families.push_back(t.name);
  meta["tables"] = families;
  return report;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << content;
}

std::string grid_json(const OccupancyGrid& g) {
  ojson j;
  j["rows"] = g.rows;
  j["cols"] = g.cols;
  ojson cells = ojson::array();
  for (std::size_t r = 0; r < g.rows; ++r) {
    ojson row = ojson::array();
    for (std::size_t c = 0; c < g.cols; ++c) row.push_back(g.at(r, c));
    cells.push_back(std::move(row));
  }
  j["cells"] = std::move(cells);
  return j.dump(1) + "\n";
}

}  // namespace

void write_report(const AnalysisReport& report, const std::filesystem::path& out_dir, OutputFormat format,
                  bool emit_plots) {
  namespace fs = std::filesystem;
  ojson full;
  full["metadata"] = report.metadata;
  ojson tables;
  for (const auto& t : report.tables) tables[t.name] = t.to_json();
  full["tables"] = std::move(tables);
  write_file(out_dir / "report.json", full.dump(2) + "\n");

  for (const auto& t : report.tables) {
    if (format == OutputFormat::csv) {
      std::ostringstream ss;
      t.write_csv(ss);
      write_file(out_dir / "tables" / (t.name + ".csv"), ss.str());
    } else {
      write_file(out_dir / "tables" / (t.name + ".json"), t.to_json().dump(2) + "\n");
    }
  }
  for (const auto& [name, grid] : report.grids) {
    if (format == OutputFormat::csv) {
      std::ostringstream ss;
      write_grid_csv(ss, grid);
      write_file(out_dir / "grids" / (name + ".csv"), ss.str());
    } else {
      write_file(out_dir / "grids" / (name + ".json"), grid_json(grid));
    }
  }
  for (const auto& [label, rows] : report.rhyme_annotations) {
    std::string body;
    for (const auto& row : rows) body += row.dump() + "\n";
    write_file(out_dir / "annotations" / (slug(label) + ".rhyme.jsonl"), body);
  }
  if (!emit_plots) return;

  std::map<std::string, std::vector<std::pair<std::string, LengthSummary>>> by_corpus;
  for (const auto& [key, box] : report.length_boxes) {
    auto sep = key.find("__");
    by_corpus[key.substr(0, sep)].emplace_back(key.substr(sep + 2), box);
  }
  for (const auto& [label, boxes] : by_corpus)
    write_file(out_dir / "plots" / ("lengths__" + slug(label) + ".svg"),
               render_boxplot_svg(boxes, "Poem length (lines): " + label));
  for (const auto& [name, grid] : report.grids)
    write_file(out_dir / "plots" / ("heatmap__" + name + ".svg"), render_heatmap_svg(grid, name));
}

void print_tables(const AnalysisReport& report, std::ostream& out, OutputFormat format) {
  if (format == OutputFormat::json) {
    ojson j;
    j["metadata"] = report.metadata;
    for (const auto& t : report.tables) j["tables"][t.name] = t.to_json();
    out << j.dump(2) << '\n';
    return;
  }
  bool first = true;
  for (const auto& t : report.tables) {
    if (!first) out << '\n';
    first = false;
    out << "# " << t.name << '\n';
    t.write_csv(out);
  }
}

}  // namespace poetics
