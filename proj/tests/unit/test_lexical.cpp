#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "oracles.hpp"
#include "poetics/error.hpp"
#include "poetics/lexical.hpp"
#include "poetics/logodds.hpp"
#include "poetics/tokenizer.hpp"
#include "test_support.hpp"

using namespace poetics;

namespace {

PoemRecord poem(std::string id, std::string text, std::string subject = "love") {
  PoemRecord r;
  r.id = std::move(id);
  r.text = std::move(text);
  r.source = Source{Source::Kind::gpt4, {}};
  r.style = "ode";
  r.subject = std::move(subject);
  r.prompt_template = catalog::Template::general;
  return r;
}

Corpus corpus_of(const std::vector<std::vector<std::string>>& docs, const std::string& prefix) {
  Corpus c;
  c.label = prefix;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    std::string text;
    for (const auto& w : docs[i]) text += w + (text.size() % 3 ? " " : "\n");
    c.records.push_back(poem(prefix + std::to_string(i), text));
  }
  return c;
}

// Syllable words that are not on the stopword list.
const std::vector<std::string> kVocab{"ka", "lo", "mi", "nu", "pe", "ro", "su", "ti", "va", "ze", "bo", "gi"};

std::vector<std::vector<std::string>> random_docs(std::mt19937& rng, std::size_t max_docs, std::size_t max_len,
                                                  std::size_t vocab) {
  std::vector<std::vector<std::string>> docs(1 + rng() % max_docs);
  for (auto& d : docs) {
    d.resize(1 + rng() % max_len);
    for (auto& w : d) w = kVocab[rng() % vocab];
  }
  return docs;
}

void check_against_oracle(const std::vector<LogOddsResult>& got, const std::map<std::string, oracle::WordScore>& want) {
  REQUIRE(got.size() == want.size());
  for (const auto& r : got) {
    auto it = want.find(r.word);
    REQUIRE(it != want.end());
    CHECK(std::abs(r.delta - it->second.delta) <= 1e-9);
    CHECK(std::abs(r.variance - it->second.variance) <= 1e-9);
    CHECK(std::abs(r.z - it->second.z) <= 1e-9);
    CHECK(r.doc_freq_a == it->second.docs_a);
    CHECK(r.doc_freq_b == it->second.docs_b);
  }
}

}  // namespace

TEST_CASE("quoted limerick stanza pronoun rate") {
  auto text = testing::read_file(testing::fixture("poems/memorial_day_limerick.txt"));
  auto tokens = tokens_of(text);
  REQUIRE(tokens.size() == 30);
  auto counts = count_pronouns(tokens);
  CHECK(counts.counts[static_cast<std::size_t>(PronounCategory::first_plural)] == 5);
  std::vector<PronounCounts> per_poem{counts};
  auto p = pronoun_profile(per_poem);
  CHECK(std::abs(p[PronounCategory::first_plural] - 16.67) <= 0.01);
  CHECK(p[PronounCategory::third] == doctest::Approx(100.0 / 30.0));
}

TEST_CASE("pronoun categories are disjoint and cover the listed forms") {
  std::set<std::string_view> seen;
  for (auto c : all_pronoun_categories()) {
    for (auto w : pronouns_in(c)) {
      CHECK(seen.insert(w).second);
      CHECK(pronoun_category(w) == c);
    }
  }
  CHECK(pronoun_category("thou") == PronounCategory::second);
  CHECK(pronoun_category("she") == PronounCategory::third_feminine);
  CHECK(pronoun_category("him") == PronounCategory::third_masculine);
  CHECK(pronoun_category("they") == PronounCategory::third);
  CHECK_FALSE(pronoun_category("the"));
}

TEST_CASE("corpus with no pronouns") {
  Corpus c;
  c.records.push_back(poem("a", "Roses bloom in spring rain"));
  auto p = pronoun_profile(c);
  for (double v : p.per_100_words) CHECK(v == 0.0);
}

TEST_CASE("pronoun normalization modes") {
  Corpus c;
  c.records.push_back(poem("a", "we we sing"));        // 2/3 first plural
  c.records.push_back(poem("b", "rain falls on fields here now", "war"));  // 0/6
  auto pooled = pronoun_profile(c);
  CHECK(pooled[PronounCategory::first_plural] == doctest::Approx(200.0 / 9.0));
  auto mean = pronoun_profile(c, {}, PronounNormalization::per_poem_mean);
  CHECK(mean[PronounCategory::first_plural] == doctest::Approx(100.0 / 3.0));
  auto excluded = pronoun_profile(c, {"war"});
  CHECK(excluded.poems == 1);
  CHECK(excluded[PronounCategory::first_plural] == doctest::Approx(200.0 / 3.0));
}

TEST_CASE("excluding every subject is an error") {
  Corpus c;
  c.records.push_back(poem("a", "we sing", "war"));
  c.records.push_back(poem("b", "they sing", "love"));
  CHECK_THROWS_AS(pronoun_profile(c, {"war", "love"}), Error);
}

TEST_CASE("stopword list") {
  std::set<std::string_view> unique(stopwords().begin(), stopwords().end());
  CHECK(unique.size() == stopwords().size());
  CHECK(is_stopword("the"));
  CHECK(is_stopword("and"));
  CHECK_FALSE(is_stopword("whisper"));
  for (const auto& w : kVocab) CHECK_FALSE(is_stopword(w));
  CHECK_FALSE(stopword_list_version().empty());
}

TEST_CASE("touchstone coverage") {
  auto group = parse_touchstone_group("echo*, whisper*");
  CHECK(group == TouchstoneGroup{"echo*", "whisper*"});
  CHECK(matches_touchstone("whispers", group));
  CHECK(matches_touchstone("echoing", group));
  CHECK_FALSE(matches_touchstone("grace", group));
  CHECK_FALSE(matches_touchstone("grace", TouchstoneGroup{"gracefully"}));
  CHECK(matches_touchstone("grace", TouchstoneGroup{"grace"}));
  CHECK_FALSE(matches_touchstone("graceful", TouchstoneGroup{"grace"}));

  std::vector<TouchstoneGroup> groups{group, {"zebra"}};
  Corpus one;
  one.records.push_back(poem("a", "the wind whispers low"));
  auto cov = touchstone_coverage(one, groups);
  CHECK(cov == std::vector<double>{100.0, 0.0});

  Corpus four;
  for (auto t : {"whisper", "echoes", "plain", "text"}) four.records.push_back(poem(t, t));
  CHECK(touchstone_coverage(four, groups)[0] == 50.0);
}

TEST_CASE("log-odds matches the rational oracle on tiny corpora") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_docs(rng, 6, 8, 4 + rng() % 8);
    auto b = random_docs(rng, 6, 8, 4 + rng() % 8);
    std::set<std::string> pooled;
    for (const auto* side : {&a, &b})
      for (const auto& d : *side) pooled.insert(d.begin(), d.end());
    if (pooled.size() < 2) continue;
    std::size_t min_docs = 1 + rng() % 3;
    bool each = rng() % 4 == 0;
    LogOddsOptions opts;
    opts.min_docs = min_docs;
    opts.filter = each ? DocFrequencyFilter::each : DocFrequencyFilter::pooled;
    auto want = oracle::logodds(a, b, min_docs, each);
    if (want.empty()) {
      CHECK_THROWS_AS(logodds(corpus_of(a, "a"), corpus_of(b, "b"), opts), Error);
      continue;
    }
    check_against_oracle(logodds(corpus_of(a, "a"), corpus_of(b, "b"), opts), want);
  }
}

TEST_CASE("log-odds honours an explicit prior mass") {
  std::mt19937 rng(43);
  auto a = random_docs(rng, 5, 10, 6), b = random_docs(rng, 5, 10, 6);
  LogOddsOptions opts;
  opts.min_docs = 1;
  opts.alpha0 = 2.5;
  check_against_oracle(weighted_logodds(a, b, opts), oracle::logodds(a, b, 1, false, oracle::Rational(5, 2)));
}

TEST_CASE("log-odds is antisymmetric and zero on identical corpora") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_docs(rng, 8, 10, 12), b = random_docs(rng, 8, 10, 12);
    LogOddsOptions opts;
    opts.min_docs = 1;
    auto ab = weighted_logodds(a, b, opts), ba = weighted_logodds(b, a, opts);
    std::map<std::string, double> zba;
    for (const auto& r : ba) zba[r.word] = r.z;
    REQUIRE(ab.size() == ba.size());
    for (const auto& r : ab) CHECK(r.z == -zba.at(r.word));
    for (std::size_t i = 1; i < ab.size(); ++i) CHECK(ab[i - 1].z >= ab[i].z);
    auto both = a;
    both.insert(both.end(), b.begin(), b.end());
    for (const auto& r : weighted_logodds(both, both, opts)) {
      CHECK(r.z == 0.0);
      CHECK(r.delta == 0.0);
    }
  }
}

TEST_CASE("log-odds removes stopwords and filters by document frequency") {
  Corpus a = corpus_of({{"the", "ka", "lo"}, {"and", "ka"}}, "a");
  Corpus b = corpus_of({{"the", "mi"}, {"mi", "lo"}}, "b");
  LogOddsOptions opts;
  opts.min_docs = 2;
  auto r = logodds(a, b, opts);
  std::set<std::string> words;
  for (const auto& x : r) words.insert(x.word);
  CHECK(words == std::set<std::string>{"ka", "lo", "mi"});
  opts.remove_stopwords = false;
  words.clear();
  for (const auto& x : logodds(a, b, opts)) words.insert(x.word);
  CHECK(words.count("the") == 1);
  opts.min_docs = 10;
  CHECK_THROWS_AS(logodds(a, b, opts), Error);
}

TEST_CASE("first-word log-odds on two 12-poem synthetic corpora") {
  std::vector<std::vector<std::string>> a, b;
  const std::vector<std::string> first_a{"in", "in", "in", "in", "in", "upon", "upon", "upon", "the", "the", "a", "beneath"};
  const std::vector<std::string> first_b{"i", "i", "i", "the", "the", "the", "the", "a", "a", "in", "when", "when"};
  for (std::size_t i = 0; i < 12; ++i) {
    a.push_back({first_a[i], "ka", "lo"});
    b.push_back({first_b[i], "mi", "nu"});
  }
  LogOddsOptions opts;
  opts.min_docs = 2;
  auto got = first_word_logodds(corpus_of(a, "a"), corpus_of(b, "b"), opts);
  std::vector<std::vector<std::string>> fa, fb;
  for (const auto& w : first_a) fa.push_back({w});
  for (const auto& w : first_b) fb.push_back({w});
  check_against_oracle(got, oracle::logodds(fa, fb, 2));
  REQUIRE(!got.empty());
  CHECK(got.front().word == "in");
  CHECK(got[1].word == "upon");
  CHECK(got.back().z < 0.0);
}

TEST_CASE("first-word log-odds of identical corpora is zero") {
  auto g = load_corpus(testing::fixture("gpt4.jsonl"), CorpusFormat::json_lines);
  LogOddsOptions opts;
  opts.min_docs = 1;
  for (const auto& r : first_word_logodds(g, g, opts)) CHECK(r.z == 0.0);
}

// With the prior mass fixed at a share of the vocabulary, doubling the data
// halves the prior's relative weight, so z ranks can move. Kept as a
// documented expected failure.
TEST_CASE("duplicating every poem keeps the ranking order of words with distinct z" * doctest::should_fail()) {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = random_docs(rng, 10, 12, 12), b = random_docs(rng, 10, 12, 12);
    LogOddsOptions opts;
    opts.min_docs = 1;
    auto base = weighted_logodds(a, b, opts);
    auto a2 = a, b2 = b;
    a2.insert(a2.end(), a.begin(), a.end());
    b2.insert(b2.end(), b.begin(), b.end());
    auto doubled = weighted_logodds(a2, b2, opts);
    REQUIRE(doubled.size() == base.size());
    std::map<std::string, double> z2;
    for (const auto& r : doubled) z2[r.word] = r.z;
    for (std::size_t i = 0; i < base.size(); ++i)
      for (std::size_t j = i + 1; j < base.size(); ++j)
        if (base[i].z > base[j].z + 1e-12) CHECK(z2[base[i].word] >= z2[base[j].word]);
  }
}

TEST_CASE("duplicating every poem with the prior mass doubled scales z by sqrt(2)") {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = random_docs(rng, 10, 12, 12), b = random_docs(rng, 10, 12, 12);
    LogOddsOptions opts;
    opts.min_docs = 1;
    opts.alpha0 = 0.12;
    auto base = weighted_logodds(a, b, opts);
    auto a2 = a, b2 = b;
    a2.insert(a2.end(), a.begin(), a.end());
    b2.insert(b2.end(), b.begin(), b.end());
    opts.alpha0 = 0.24;
    auto doubled = weighted_logodds(a2, b2, opts);
    REQUIRE(doubled.size() == base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
      CHECK(doubled[i].word == base[i].word);
      CHECK(doubled[i].delta == doctest::Approx(base[i].delta).epsilon(1e-12));
      CHECK(doubled[i].z == doctest::Approx(base[i].z * std::sqrt(2.0)).epsilon(1e-12));
    }
  }
}
