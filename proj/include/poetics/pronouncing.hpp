#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace poetics {

// One ARPAbet pronunciation; vowels carry a stress digit (e.g. "EY1").
using Phonemes = std::vector<std::string>;

struct PronunciationEntry {
  std::string word;  // lowercase
  std::vector<Phonemes> variants;
};

// Suffix of a pronunciation that must match for two words to rhyme.
struct RhymePart {
  Phonemes phonemes;
  friend bool operator==(const RhymePart&, const RhymePart&) = default;
};

bool is_vowel(std::string_view phoneme);

// From the last vowel with stress 1 or 2 to the end; if the variant has no
// stressed vowel, from the last vowel of any stress. Throws Error("no
// syllabic nucleus") when the variant has no vowel at all.
RhymePart rhyme_part(std::span<const std::string> variant);

// One digit per vowel, in order. Empty for vowel-free variants.
std::string stress_pattern(std::span<const std::string> variant);

// Reader for the CMU Pronouncing Dictionary plain-text format. Both the
// classic layout ("WORD  PH ON", variants "WORD(1)", ";;;" comments) and
// the newer lowercase layout ("word ph on", "word(2)", trailing "# ...")
// are accepted.
class Dictionary {
public:
  static Dictionary load(const std::filesystem::path& path);
  static Dictionary parse(std::string_view contents);

  // Case-insensitive. Curly apostrophes are folded to '\''.
  const PronunciationEntry* lookup(std::string_view word) const;
  bool contains(std::string_view word) const { return lookup(word) != nullptr; }

  // Vowel count per variant; nullopt for out-of-vocabulary words.
  std::optional<std::vector<std::size_t>> syllable_count(std::string_view word) const;

  std::size_t size() const { return entries_.size(); }
  std::size_t skipped_lines() const { return skipped_; }
  // Hex SHA-256 of the bytes the dictionary was read from.
  const std::string& checksum() const { return checksum_; }

  // All headwords, sorted.
  std::vector<std::string> words() const;

private:
  std::unordered_map<std::string, PronunciationEntry> entries_;
  std::size_t skipped_ = 0;
  std::string checksum_;
};

std::string sha256_hex(std::string_view bytes);

}  // namespace poetics
