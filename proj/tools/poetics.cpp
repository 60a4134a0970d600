// poetics: command-line front end for the poetry corpus toolkit.
//
//   poetics analyze   --dict cmudict.dict --out report/ human.jsonl gpt4.jsonl --compare
//   poetics structure|rhyme|meter|lexstats|compare  <corpora...>
//   poetics generate  --model gpt-4 --out gpt4.jsonl [--dry-run] [--resume]
//
// Exit codes: 0 success, 1 analysis or I/O failure, 2 usage error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "poetics/catalog.hpp"
#include "poetics/error.hpp"
#include "poetics/generation.hpp"
#include "poetics/report.hpp"
#include "poetics/text.hpp"

namespace fs = std::filesystem;
using namespace poetics;

namespace {

struct UsageError : Error {
  using Error::Error;
};

struct GlobalFlags {
  std::string dict;
  std::string out;
  std::string format = "csv";
  std::size_t threads = 1;
  bool emit_plots = false;
};

struct CorpusFlags {
  std::vector<std::string> paths;
  std::string input_format = "auto";
  std::string source;
  std::string style;
  std::string prompt_template;
  std::vector<std::string> labels;
};

struct AnalysisFlags {
  bool no_strip = false;
  std::size_t grid_rows = kDefaultGridRows;
  std::size_t grid_cols = kDefaultGridCols;
  double threshold = kDefaultIambicThreshold;
  std::size_t min_docs = 10;
  std::string doc_filter = "pooled";
  std::optional<double> alpha0;
  double alpha_scale = 0.01;
  std::size_t top_k = 15;
  std::size_t top_k_first = 10;
  std::vector<std::string> touchstones;
  std::string exclude_subjects;
  bool no_exclusion = false;
  bool compare = false;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto comma = s.find(',', start);
    auto item = text::trim(std::string_view(s).substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (!item.empty()) out.emplace_back(item);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

void add_corpus_flags(CLI::App* cmd, CorpusFlags& f) {
  cmd->add_option("corpora", f.paths, "Corpus files (JSON Lines or CSV) or directories of .txt poems")
      ->required()
      ->check(CLI::ExistingPath);
  cmd->add_option("--input-format", f.input_format, "auto, jsonl, csv or dir")
      ->check(CLI::IsMember({"auto", "jsonl", "csv", "dir"}));
  cmd->add_option("--source", f.source, "Default source for records without one (human, gpt35, gpt4, model:<name>)");
  cmd->add_option("--style", f.style, "Default style for records without one");
  cmd->add_option("--template", f.prompt_template, "Default prompt template for generated records")
      ->check(CLI::IsMember({"general", "figurative", "specific"}));
  cmd->add_option("--label", f.labels, "Display label per corpus, in corpus order");
}

void add_analysis_flags(CLI::App* cmd, AnalysisFlags& f, bool with_compare) {
  cmd->add_flag("--no-strip-prefatory", f.no_strip, "Keep leading dedications and dates in fixed-form human poems");
  cmd->add_option("--grid-rows", f.grid_rows, "Occupancy grid rows")->check(CLI::PositiveNumber);
  cmd->add_option("--grid-cols", f.grid_cols, "Occupancy grid columns")->check(CLI::PositiveNumber);
  cmd->add_option("--iambic-threshold", f.threshold, "Minimum iambic score for a dominant-iambic poem")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--min-docs", f.min_docs, "Minimum poems containing a word for log-odds");
  cmd->add_option("--doc-filter", f.doc_filter, "Apply --min-docs to both corpora pooled, or to each")
      ->check(CLI::IsMember({"pooled", "each"}));
  cmd->add_option("--alpha0", f.alpha0, "Total Dirichlet prior mass (default: alpha-scale x vocabulary size)");
  cmd->add_option("--alpha-scale", f.alpha_scale, "Prior mass per vocabulary word");
  cmd->add_option("--top-k", f.top_k, "Distinctive words reported per side");
  cmd->add_option("--top-k-first", f.top_k_first, "Distinctive opening words reported per side");
  cmd->add_option("--touchstone", f.touchstones, "Touchstone word group, e.g. 'echo*,whisper*' (repeatable)");
  cmd->add_option("--exclude-subjects", f.exclude_subjects,
                  "Comma-separated subjects left out of the second pronoun row (default: occasions and holidays)");
  cmd->add_flag("--no-subject-exclusion", f.no_exclusion, "Skip the pronoun row with subjects removed");
  if (with_compare) cmd->add_flag("--compare", f.compare, "Add log-odds tables for each corpus against the first");
}

std::vector<CorpusInput> corpus_inputs(const CorpusFlags& f) {
  if (!f.labels.empty() && f.labels.size() != f.paths.size())
    throw UsageError("--label must be given once per corpus");
  LoadDefaults defaults;
  if (!f.source.empty()) {
    defaults.source = Source::parse(f.source);
    if (!defaults.source) throw UsageError("unknown --source '" + f.source + "'");
  }
  if (!f.style.empty()) defaults.style = f.style;
  if (!f.prompt_template.empty()) defaults.prompt_template = catalog::parse_template(f.prompt_template);

  std::vector<CorpusInput> inputs;
  for (std::size_t i = 0; i < f.paths.size(); ++i) {
    CorpusInput in;
    in.path = f.paths[i];
    if (f.input_format != "auto") in.format = parse_corpus_format(f.input_format);
    in.defaults = defaults;
    if (!f.labels.empty()) in.label = f.labels[i];
    inputs.push_back(std::move(in));
  }
  return inputs;
}

AnalysisOptions analysis_options(const AnalysisFlags& f, const GlobalFlags& g) {
  AnalysisOptions o;
  o.strip_prefatory = !f.no_strip;
  o.grid_rows = f.grid_rows;
  o.grid_cols = f.grid_cols;
  o.iambic_threshold = f.threshold;
  o.logodds.min_docs = f.min_docs;
  o.logodds.filter = f.doc_filter == "each" ? DocFrequencyFilter::each : DocFrequencyFilter::pooled;
  o.logodds.alpha0 = f.alpha0;
  o.logodds.alpha_scale = f.alpha_scale;
  o.top_k_words = f.top_k;
  o.top_k_first_words = f.top_k_first;
  if (f.touchstones.empty()) {
    o.touchstones = default_touchstone_groups();
  } else {
    for (const auto& spec : f.touchstones) o.touchstones.push_back(parse_touchstone_group(spec));
  }
  if (!f.no_exclusion) {
    if (f.exclude_subjects.empty()) {
      o.excluded_subjects = occasion_and_holiday_subjects();
    } else {
      for (auto& s : split_list(f.exclude_subjects)) o.excluded_subjects.insert(s);
    }
  }
  o.compare = f.compare;
  o.threads = g.threads;
  return o;
}

OutputFormat output_format(const GlobalFlags& g) { return g.format == "json" ? OutputFormat::json : OutputFormat::csv; }

int run_analysis(const GlobalFlags& g, const CorpusFlags& cf, AnalysisOptions opts, bool default_out_dir) {
  if (opts.compare && cf.paths.size() < 2) throw UsageError("comparison needs at least two corpora");
  std::optional<Dictionary> dict;
  if (opts.rhyme || opts.meter) {
    if (g.dict.empty()) throw UsageError("rhyme and meter analysis need --dict (or POETICS_DICT)");
    dict = Dictionary::load(g.dict);
    if (dict->skipped_lines())
      std::cerr << "poetics: skipped " << dict->skipped_lines() << " malformed dictionary line(s)\n";
  }
  auto corpora = load_inputs(corpus_inputs(cf), opts.strip_prefatory);
  auto report = analyze(corpora, dict ? &*dict : nullptr, opts);

  std::string out = g.out;
  if (out.empty() && default_out_dir) out = "poetics-report";
  if (out.empty()) {
    print_tables(report, std::cout, output_format(g));
  } else {
    write_report(report, out, output_format(g), g.emit_plots);
    std::cerr << "poetics: wrote " << report.tables.size() << " tables to " << out << "\n";
  }
  return 0;
}

struct GenerateFlags {
  std::string model;
  std::string endpoint = "https://api.openai.com/v1/chat/completions";
  std::string api_key_env = "OPENAI_API_KEY";
  std::string source;
  bool dry_run = false;
  bool resume = false;
  double temperature = 1.0;
  int max_tokens = 1024;
  std::size_t concurrency = 4;
  double rpm = 0.0;
  int max_retries = 5;
  int retry_base_ms = 1000;
  std::string styles, subjects, templates;
};

std::vector<PromptSpec> grid_from_flags(const GenerateFlags& f) {
  std::vector<std::string> styles = split_list(f.styles), subjects = split_list(f.subjects);
  std::vector<std::string_view> style_views, subject_views;
  if (styles.empty()) {
    style_views.assign(catalog::styles().begin(), catalog::styles().end());
  } else {
    for (const auto& s : styles) {
      if (!catalog::is_known_style(s)) throw UsageError("unknown style '" + s + "'");
      style_views.emplace_back(s);
    }
  }
  if (subjects.empty()) {
    subject_views.assign(catalog::subjects().begin(), catalog::subjects().end());
  } else {
    for (const auto& s : subjects) subject_views.emplace_back(s);
  }
  std::vector<catalog::Template> templates;
  for (const auto& t : split_list(f.templates)) {
    auto parsed = catalog::parse_template(t);
    if (!parsed) throw UsageError("unknown template '" + t + "'");
    templates.push_back(*parsed);
  }
  if (templates.empty()) templates.assign(catalog::all_templates().begin(), catalog::all_templates().end());
  return build_grid(style_views, subject_views, templates);
}

int run_generate(const GlobalFlags& g, const GenerateFlags& f) {
  auto specs = grid_from_flags(f);
  if (f.dry_run) {
    for (const auto& s : specs) std::cout << s.rendered << '\n';
    std::cerr << "poetics: " << specs.size() << " prompts\n";
    return 0;
  }
  if (f.model.empty()) throw UsageError("--model is required unless --dry-run");
  if (g.out.empty()) throw UsageError("--out <file.jsonl> is required for generate");
  if (fs::exists(g.out) && !f.resume) throw UsageError(g.out + " exists; pass --resume to continue it");

  const char* key = std::getenv(f.api_key_env.c_str());
  if (!key || !*key) throw UsageError("environment variable " + f.api_key_env + " is not set");

  GenerationJob job;
  job.model = f.model;
  if (f.source.empty()) {
    job.source = source_for_model(f.model);
  } else {
    auto parsed = Source::parse(f.source);
    if (!parsed || !parsed->is_generated()) throw UsageError("--source must name a generated source");
    job.source = *parsed;
  }
  job.specs = std::move(specs);
  job.temperature = f.temperature;
  job.max_tokens = f.max_tokens;
  job.concurrency = f.concurrency;
  job.max_requests_per_minute = f.rpm;
  job.retry.max_retries = f.max_retries;
  job.retry.base_delay = std::chrono::milliseconds(f.retry_base_ms);
  job.output = g.out;

  HttpChatClient client(f.endpoint, key);
  auto result = run_job(job, client, [](const std::string& msg) { std::cerr << "poetics: " << msg << '\n'; });
  const auto& s = result.summary;
  std::cerr << "poetics: " << s.completed << " completed, " << s.already_done << " already present, " << s.failed
            << " failed, " << s.retries << " retries; corpus now holds " << result.corpus.size() << " poems\n";
  return s.failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Poetry corpus analysis: structure, rhyme, meter and distinctive-word statistics"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  GlobalFlags g;
  app.add_option("--dict", g.dict, "CMU Pronouncing Dictionary file")->envname("POETICS_DICT");
  app.add_option("--out", g.out, "Output directory (generate: output .jsonl file)");
  app.add_option("--format", g.format, "Table format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--threads", g.threads, "Worker threads for per-poem analysis")->check(CLI::PositiveNumber);
  app.add_flag("--emit-plots", g.emit_plots, "Also write SVG box plots and heatmaps under plots/");

  struct Sub {
    CLI::App* cmd;
    CorpusFlags corpus;
    AnalysisFlags analysis;
  };
  std::vector<std::unique_ptr<Sub>> subs;
  auto make = [&](const char* name, const char* help, bool with_compare) {
    auto sub = std::make_unique<Sub>();
    sub->cmd = app.add_subcommand(name, help);
    add_corpus_flags(sub->cmd, sub->corpus);
    add_analysis_flags(sub->cmd, sub->analysis, with_compare);
    subs.push_back(std::move(sub));
    return subs.back().get();
  };
  auto* analyze_cmd = make("analyze", "Run every analysis and write a report directory", true);
  auto* structure_cmd = make("structure", "Line counts, stanzas, quatrains and occupancy grids", false);
  auto* rhyme_cmd = make("rhyme", "End-rhyme detection (AA, ABAB, ABBA, ABCB)", false);
  auto* meter_cmd = make("meter", "Stress sequences and iambic dominance", false);
  auto* lex_cmd = make("lexstats", "Pronoun rates and touchstone-word coverage", false);
  auto* compare_cmd = make("compare", "Weighted log-odds of words and opening words vs the first corpus", false);

  GenerateFlags gen;
  auto* gen_cmd = app.add_subcommand("generate", "Send the prompt grid to a chat-completions endpoint");
  gen_cmd->add_option("--model", gen.model, "Model identifier sent with each request");
  gen_cmd->add_option("--endpoint", gen.endpoint, "Chat-completions URL");
  gen_cmd->add_option("--api-key-env", gen.api_key_env, "Environment variable holding the API key");
  gen_cmd->add_option("--source", gen.source, "Corpus source label (default derived from --model)");
  gen_cmd->add_flag("--dry-run", gen.dry_run, "Print the rendered prompts and exit");
  gen_cmd->add_flag("--resume", gen.resume, "Continue an existing output file, skipping completed prompts");
  gen_cmd->add_option("--temperature", gen.temperature, "Sampling temperature");
  gen_cmd->add_option("--max-tokens", gen.max_tokens, "Maximum output tokens per poem");
  gen_cmd->add_option("--concurrency", gen.concurrency, "Requests in flight")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--rpm", gen.rpm, "Request-rate ceiling per minute (0: none)");
  gen_cmd->add_option("--max-retries", gen.max_retries, "Retries for throttled or failed requests");
  gen_cmd->add_option("--retry-base-ms", gen.retry_base_ms, "First backoff delay; doubles per retry");
  gen_cmd->add_option("--styles", gen.styles, "Comma-separated subset of styles");
  gen_cmd->add_option("--subjects", gen.subjects, "Comma-separated subset of subjects");
  gen_cmd->add_option("--templates", gen.templates, "Comma-separated subset of templates");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen_cmd->parsed()) return run_generate(g, gen);
    for (const auto& sub : subs) {
      if (!sub->cmd->parsed()) continue;
      auto opts = analysis_options(sub->analysis, g);
      bool is_analyze = sub->cmd == analyze_cmd->cmd;
      if (!is_analyze) {
        opts.structure = sub->cmd == structure_cmd->cmd;
        opts.rhyme = sub->cmd == rhyme_cmd->cmd;
        opts.meter = sub->cmd == meter_cmd->cmd;
        opts.lexical = sub->cmd == lex_cmd->cmd;
        opts.compare = sub->cmd == compare_cmd->cmd;
      }
      return run_analysis(g, sub->corpus, opts, is_analyze);
    }
  } catch (const UsageError& e) {
    std::cerr << "poetics: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "poetics: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
