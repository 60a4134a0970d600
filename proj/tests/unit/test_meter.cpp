#include <doctest.h>

#include <algorithm>
#include <random>

#include "poetics/error.hpp"
#include "poetics/meter.hpp"
#include "test_support.hpp"

using namespace poetics;
using testing::dict;

namespace {

std::vector<StressSequence> lines_of(std::initializer_list<const char*> digits) {
  std::vector<StressSequence> out;
  for (const char* d : digits) out.push_back(StressSequence{d, out.size()});
  return out;
}

}  // namespace

TEST_CASE("quoted pentameter line resolves to an iambic pattern") {
  auto seq = line_stress("Upon a stage where shadows nightly reign", dict());
  // shadows is SH AE1 D OW2 Z; the secondary stress counts as stressed
  CHECK(seq.digits == "01xxx1110x");
  CHECK(iambic_line_score(seq.digits) >= 0.9);
  CHECK(iambic_line_score(seq.digits) == 0.9);
}

TEST_CASE("single words and empty lines") {
  CHECK(line_stress("whisper", dict()).digits == "10");
  CHECK(line_stress("", dict()).digits.empty());
  CHECK(line_stress("hmm", dict()).digits.empty());
}

TEST_CASE("out-of-vocabulary words contribute estimated unknown syllables") {
  auto seq = line_stress("zorbaflex upon", dict());
  CHECK(seq.digits == "???01");
  CHECK(seq.resolvable() == 2);
  CHECK(estimate_syllables("zorbaflex") == 3);
  CHECK(estimate_syllables("xyz") == 1);
  CHECK(estimate_syllables("brrr") == 1);
  CHECK(pattern_agreement("??", "01") == 0.5);
}

TEST_CASE("strict iambic poem") {
  auto lines = lines_of({"0101010101", "0101010101", "0101010101"});
  auto v = iambic_score(lines);
  CHECK(v.iambic_score == 1.0);
  CHECK(v.dominant);
  CHECK(v.syllables_per_line == std::vector<std::size_t>{10, 10, 10});
}

TEST_CASE("dactylic poem is not iambic") {
  auto lines = lines_of({"100100100", "100100100"});
  auto v = iambic_score(lines);
  CHECK(v.iambic_score == doctest::Approx(4.0 / 9.0));
  CHECK(v.iambic_score <= 0.5);
  CHECK_FALSE(v.dominant);

  auto words = parse_structure("merrily happily merrily\nhappily tenderly carefully\n");
  auto w = iambic_score(words, dict());
  CHECK(w.iambic_score <= 0.5);
  CHECK_FALSE(w.dominant);
}

TEST_CASE("unscannable poems are an error") {
  CHECK_THROWS_WITH_AS(iambic_score(lines_of({"?", "??", "x"})), "no scannable lines", Error);
  CHECK_THROWS_AS(iambic_score(parse_structure("zorbaflex quixlotl\nhmm\n"), dict()), Error);
}

TEST_CASE("pattern and complement sum to one on resolved even-length lines") {
  std::mt19937 rng(29);
  for (int i = 0; i < 500; ++i) {
    std::string s(2 * (1 + rng() % 12), '0');
    for (auto& c : s) c = rng() % 2 ? '1' : '0';
    CHECK(pattern_agreement(s, "01") + pattern_agreement(s, "10") == 1.0);
  }
}

TEST_CASE("iambic score is invariant under line reordering") {
  std::mt19937 rng(31);
  const std::string alphabet = "01x?";
  std::vector<StressSequence> lines;
  for (int i = 0; i < 25; ++i) {
    std::string d(2 + rng() % 12, '0');
    for (auto& c : d) c = alphabet[rng() % alphabet.size()];
    d[0] = '0';
    d[1] = '1';
    lines.push_back(StressSequence{d, static_cast<std::size_t>(i)});
  }
  auto base = iambic_score(lines);
  for (int t = 0; t < 20; ++t) {
    std::shuffle(lines.begin(), lines.end(), rng);
    CHECK(iambic_score(lines).iambic_score == base.iambic_score);
  }
}

TEST_CASE("corpus meter stats skip unscanned poems") {
  MeterVerdict yes;
  yes.iambic_score = 0.9;
  yes.dominant = true;
  MeterVerdict no;
  no.iambic_score = 0.5;
  std::vector<std::optional<MeterVerdict>> verdicts{yes, no, std::nullopt, yes};
  auto s = corpus_meter_stats(verdicts);
  CHECK(s.poems == 4);
  CHECK(s.scanned_poems == 3);
  CHECK(s.pct_dominant_iambic == doctest::Approx(200.0 / 3.0));
  CHECK(s.mean_iambic_score == doctest::Approx((0.9 + 0.5 + 0.9) / 3.0));
}
