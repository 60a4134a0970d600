#include <doctest.h>

#include <random>
#include <sstream>

#include "poetics/corpus.hpp"
#include "poetics/error.hpp"
#include "poetics/text.hpp"
#include "test_support.hpp"

using namespace poetics;
using testing::fixture;

namespace {

std::string error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

std::size_t nonblank_lines(std::string_view text) {
  std::size_t n = 0;
  for (auto l : text::split_lines(text)) n += !text::is_blank(l);
  return n;
}

PoemRecord poem_of(std::string text, std::string style = "sonnet") {
  PoemRecord r;
  r.id = "p";
  r.text = std::move(text);
  r.style = std::move(style);
  return r;
}

std::string numbered_lines(std::size_t n) {
  std::string s;
  for (std::size_t i = 1; i <= n; ++i) s += "Line number " + std::to_string(i) + " of the poem\n";
  return s;
}

}  // namespace

TEST_CASE("json lines file of three valid records") {
  auto c = parse_json_lines(
      R"({"id":"a","text":"one\ntwo","source":"human","style":"sonnet"}
{"id":"b","text":"three","source":"gpt4","style":"haiku","subject":"love","template":"general"}
{"id":"c","text":"four","source":"gpt35","style":"ode","template":"specific","extra":"ignored"}
)",
      "mem.jsonl");
  REQUIRE(c.size() == 3);
  CHECK(c.records[1].source.kind == Source::Kind::gpt4);
  CHECK(c.records[1].subject == "love");
  CHECK(c.records[2].prompt_template == catalog::Template::specific);
}

TEST_CASE("record missing text names the offending line") {
  auto msg = error_of([] {
    parse_json_lines("{\"id\":\"a\",\"text\":\"x\",\"source\":\"human\"}\n{\"id\":\"b\",\"source\":\"human\"}\n",
                     "bad.jsonl");
  });
  CHECK(msg.find("bad.jsonl:2") != std::string::npos);
  CHECK(msg.find("text") != std::string::npos);
}

TEST_CASE("malformed and invalid records are errors") {
  CHECK(error_of([] { parse_json_lines("{\"text\":\"x\",\"source\":\"robot\"}\n", "f"); }).find("unknown source") !=
        std::string::npos);
  CHECK(error_of([] {
          parse_json_lines("{\"id\":\"a\",\"text\":\"x\",\"source\":\"human\"}\n{\"id\":\"a\",\"text\":\"y\",\"source\":\"human\"}\n",
                           "f");
        }).find("duplicate id") != std::string::npos);
  CHECK(error_of([] { parse_json_lines("{not json}\n", "f"); }).find("f:1") != std::string::npos);
  // generated poems carry a template; human poems do not
  CHECK_THROWS_AS(parse_json_lines("{\"text\":\"x\",\"source\":\"gpt4\",\"style\":\"ode\"}\n", "f"), Error);
  CHECK_THROWS_AS(
      parse_json_lines("{\"text\":\"x\",\"source\":\"human\",\"style\":\"ode\",\"template\":\"general\"}\n", "f"),
      Error);
  CHECK_THROWS_AS(parse_json_lines("{\"text\":\"   \",\"source\":\"human\"}\n", "f"), Error);
}

TEST_CASE("source labels round-trip") {
  for (std::string s : {"human", "gpt35", "gpt4", "model:llama-3"}) {
    auto src = Source::parse(s);
    REQUIRE(src);
    CHECK(src->label() == s);
  }
  CHECK_FALSE(Source::parse("gpt5"));
}

TEST_CASE("text directory loads one record per file with a defaulted source") {
  LoadDefaults d;
  d.source = Source{Source::Kind::human, {}};
  auto c = load_corpus(fixture("textdir"), CorpusFormat::text_directory, d);
  REQUIRE(c.size() == 2);
  CHECK(c.records[0].id == "rain");
  CHECK(c.records[1].id == "stars");
  CHECK(c.records[1].source.kind == Source::Kind::human);
  CHECK(c.records[1].text.find('\r') == std::string::npos);
}

TEST_CASE("format detection") {
  CHECK(detect_corpus_format(fixture("gpt4.jsonl")) == CorpusFormat::json_lines);
  CHECK(detect_corpus_format(fixture("small.csv")) == CorpusFormat::csv);
  CHECK(detect_corpus_format(fixture("textdir")) == CorpusFormat::text_directory);
  CHECK_THROWS_AS(load_corpus(fixture("missing.jsonl"), CorpusFormat::json_lines), Error);
}

TEST_CASE("csv and json lines fixtures agree") {
  auto csv = load_corpus(fixture("small.csv"), CorpusFormat::csv);
  auto jl = load_corpus(fixture("gpt4.jsonl"), CorpusFormat::json_lines);
  REQUIRE(csv.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(csv.records[i].id == jl.records[i].id);
    CHECK(csv.records[i].text == jl.records[i].text);
    CHECK(csv.records[i].subject == jl.records[i].subject);
    CHECK(csv.records[i].prompt_template == jl.records[i].prompt_template);
  }
}

TEST_CASE("load then serialize round-trips text modulo CRLF") {
  std::mt19937 rng(11);
  const std::vector<std::string> pieces{"word", " ", "\r\n", "\n", "\"q\"", "\\", "é", "\t", "—", ","};
  Corpus corpus;
  for (int i = 0; i < 50; ++i) {
    PoemRecord r;
    r.id = "r" + std::to_string(i);
    r.text = "start";
    for (int k = 0; k < 30; ++k) r.text += pieces[rng() % pieces.size()];
    r.source = Source{Source::Kind::gpt4, {}};
    r.style = "ode";
    r.subject = "love";
    r.prompt_template = catalog::Template::general;
    corpus.records.push_back(r);
  }
  std::ostringstream out;
  write_json_lines(out, corpus);
  auto back = parse_json_lines(out.str(), "roundtrip");
  REQUIRE(back.size() == corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    CHECK(back.records[i].text == text::normalize_newlines(corpus.records[i].text));
    CHECK(back.records[i].id == corpus.records[i].id);
    CHECK(to_json_line(back.records[i]) == to_json_line(parse_json_lines(to_json_line(back.records[i]), "x").records[0]));
  }
}

TEST_CASE("prefatory dedication is stripped to the conventional length") {
  auto p = poem_of("for my mother:\n" + numbered_lines(14));
  auto out = strip_prefatory(p, 14);
  CHECK(nonblank_lines(out.text) == 14);
  CHECK(out.text.rfind("Line number 1 ", 0) == 0);
}

TEST_CASE("prefatory stripping leaves poems at or far beyond the length") {
  auto exact = poem_of(numbered_lines(14));
  CHECK(strip_prefatory(exact, 14).text == exact.text);
  auto long_poem = poem_of("for my mother:\n" + numbered_lines(29));
  CHECK(strip_prefatory(long_poem, 14).text == long_poem.text);
  auto no_expectation = poem_of("for my mother:\n" + numbered_lines(14), "ode");
  CHECK(strip_prefatory(no_expectation, std::nullopt).text == no_expectation.text);
  // extra lines that are not prefatory stay
  auto body = poem_of(numbered_lines(16));
  CHECK(strip_prefatory(body, 14).text == body.text);
}

TEST_CASE("prefatory lines: dates, epigraph attributions, headers") {
  CHECK(is_prefatory_line("for my mother:"));
  CHECK(is_prefatory_line("After Li Po"));
  CHECK(is_prefatory_line("June 5, 1921"));
  CHECK(is_prefatory_line("1914"));
  CHECK(is_prefatory_line("12/25/1999"));
  CHECK_FALSE(is_prefatory_line("Shall I compare thee to a summer's day?"));
  CHECK_FALSE(is_prefatory_line(""));
}

TEST_CASE("prefatory stripping is idempotent and never goes below the expected length") {
  std::mt19937 rng(3);
  const std::vector<std::string> preface{"for E. L.:", "After Keats", "March 1901", "\n", "Epigraph:"};
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t expected = 3 + rng() % 16;
    std::string text;
    auto extra = rng() % 14;
    for (std::size_t i = 0; i < extra; ++i) text += preface[rng() % preface.size()] + "\n";
    text += numbered_lines(expected - (rng() % 3));
    auto p = poem_of(text);
    auto once = strip_prefatory(p, expected);
    CHECK(strip_prefatory(once, expected).text == once.text);
    auto before = nonblank_lines(p.text), after = nonblank_lines(once.text);
    CHECK(after <= before);
    if (after < before) CHECK(after >= expected);
  }
}

TEST_CASE("conventional lengths of fixed forms") {
  CHECK(conventional_length("sonnet") == 14);
  CHECK(conventional_length("villanelle") == 19);
  CHECK(conventional_length("sestina") == 39);
  CHECK(conventional_length("limerick") == 5);
  CHECK_FALSE(conventional_length("ode"));
}
