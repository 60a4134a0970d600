#include <doctest.h>

#include <random>

#include "poetics/error.hpp"
#include "poetics/pronouncing.hpp"
#include "test_support.hpp"

using namespace poetics;
using testing::dict;

namespace {

Phonemes ph(std::initializer_list<const char*> list) { return Phonemes(list.begin(), list.end()); }

}  // namespace

TEST_CASE("single-entry dictionary") {
  auto d = Dictionary::parse("HAZE  HH EY1 Z\n");
  auto e = d.lookup("haze");
  REQUIRE(e);
  REQUIRE(e->variants.size() == 1);
  CHECK(e->variants[0] == ph({"HH", "EY1", "Z"}));
}

TEST_CASE("numbered variants collect under one headword") {
  auto d = Dictionary::parse("READ  R EH1 D\nREAD(1)  R IY1 D\n");
  auto e = d.lookup("READ");
  REQUIRE(e);
  CHECK(e->variants.size() == 2);
  CHECK(d.size() == 1);
}

TEST_CASE("comment-only file gives an empty dictionary") {
  auto d = Dictionary::parse(";;; just a comment\n;;; another\n");
  CHECK(d.size() == 0);
  CHECK_FALSE(d.contains("the"));
  CHECK_FALSE(d.syllable_count("the"));
}

TEST_CASE("newer lowercase layout with trailing comments") {
  auto d = Dictionary::parse("haze HH EY1 Z\nread R EH1 D\nread(2) R IY1 D # past tense\n");
  CHECK(d.lookup("read")->variants.size() == 2);
  CHECK(d.lookup("read")->variants[1] == ph({"R", "IY1", "D"}));
}

TEST_CASE("malformed lines are skipped and counted") {
  auto d = Dictionary::parse("GOOD  G UH1 D\nBROKEN\nBAD  XX1 Q\nFINE  F AY1 N\n");
  CHECK(d.size() == 2);
  CHECK(d.skipped_lines() == 2);
}

TEST_CASE("unreadable file is an error") {
  CHECK_THROWS_AS(Dictionary::load(testing::fixture("does-not-exist.dict")), Error);
}

TEST_CASE("checksum is the SHA-256 of the file bytes") {
  CHECK(dict().checksum() == "bacb2f5cb8b54600ac8a9e5c97f4c79d230c33d580ef757c0ff17b068a4deeef");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("rhyme parts") {
  CHECK(rhyme_part(ph({"AH0", "B", "L", "EY1", "Z"})).phonemes == ph({"EY1", "Z"}));
  CHECK(rhyme_part(ph({"P", "R", "EY1", "Z"})).phonemes == ph({"EY1", "Z"}));
  CHECK(rhyme_part(ph({"TH", "AH0"})).phonemes == ph({"AH0"}));
  CHECK(rhyme_part(ph({"K", "AA1", "N", "T", "R", "AE2", "K", "T"})).phonemes == ph({"AE2", "K", "T"}));
  CHECK_THROWS_WITH_AS(rhyme_part(ph({"HH", "M"})), "no syllabic nucleus", Error);
}

TEST_CASE("stress patterns") {
  CHECK(stress_pattern(ph({"AH0", "P", "AA1", "N"})) == "01");
  CHECK(stress_pattern(ph({"W", "IH1", "S", "P", "ER0"})) == "10");
  CHECK(stress_pattern(ph({"HH", "M"})) == "");
}

TEST_CASE("syllable counts from the dictionary") {
  CHECK(dict().syllable_count("embrace") == std::vector<std::size_t>{2, 2});
  CHECK(dict().syllable_count("a")->front() == 1);
  CHECK(dict().syllable_count("echoing") == std::vector<std::size_t>{3});
  CHECK_FALSE(dict().syllable_count("zzyzxq"));
}

TEST_CASE("lookups are case-insensitive and fold curly apostrophes") {
  CHECK(dict().lookup("Haze") == dict().lookup("HAZE"));
  CHECK(dict().lookup("haze") == dict().lookup("hAzE"));
  REQUIRE(dict().contains("who've"));
  CHECK(dict().lookup("who’ve") == dict().lookup("who've"));
}

TEST_CASE("every entry: rhyme part is a suffix and stress length equals syllables") {
  const auto& d = dict();
  std::size_t checked = 0;
  for (const auto& w : d.words()) {
    const auto* e = d.lookup(w);
    REQUIRE(e);
    auto counts = d.syllable_count(w);
    REQUIRE(counts);
    for (std::size_t v = 0; v < e->variants.size(); ++v) {
      const auto& var = e->variants[v];
      CHECK(stress_pattern(var).size() == (*counts)[v]);
      if ((*counts)[v] == 0) continue;
      auto part = rhyme_part(var).phonemes;
      REQUIRE(part.size() <= var.size());
      CHECK(std::equal(part.rbegin(), part.rend(), var.rbegin()));
      CHECK(is_vowel(part.front()));
      ++checked;
    }
  }
  CHECK(checked > 2000);
}

TEST_CASE("non-UTF-8 lines are read as Latin-1") {
  auto d = Dictionary::parse("CAF\xc9  K AE0 F EY1\n");
  CHECK(d.contains("café"));
}
