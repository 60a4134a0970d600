#include "poetics/pronouncing.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include <openssl/evp.h>

#include "poetics/error.hpp"
#include "poetics/text.hpp"

namespace poetics {
namespace {

constexpr std::array<std::string_view, 15> kVowels{"AA", "AE", "AH", "AO", "AW", "AY", "EH", "ER",
                                                   "EY", "IH", "IY", "OW", "OY", "UH", "UW"};
constexpr std::array<std::string_view, 24> kConsonants{"B",  "CH", "D", "DH", "F",  "G",  "HH", "JH",
                                                       "K",  "L",  "M", "N",  "NG", "P",  "R",  "S",
                                                       "SH", "T",  "TH", "V", "W",  "Y",  "Z",  "ZH"};

bool is_vowel_base(std::string_view base) {
  return std::find(kVowels.begin(), kVowels.end(), base) != kVowels.end();
}

bool is_valid_phoneme(std::string_view ph) {
  if (ph.empty()) return false;
  char last = ph.back();
  if (last >= '0' && last <= '2') return is_vowel_base(ph.substr(0, ph.size() - 1));
  // Unstressed vowels without a digit do not occur in the published file.
  return std::find(kConsonants.begin(), kConsonants.end(), ph) != kConsonants.end();
}

std::string fold_key(std::string_view word) {
  std::string out;
  out.reserve(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    // U+2019 / U+2018 -> '
    if (i + 2 < word.size() && static_cast<unsigned char>(word[i]) == 0xE2 &&
        static_cast<unsigned char>(word[i + 1]) == 0x80 &&
        (static_cast<unsigned char>(word[i + 2]) == 0x99 || static_cast<unsigned char>(word[i + 2]) == 0x98)) {
      out.push_back('\'');
      i += 2;
      continue;
    }
    // U+00C0..U+00DE capitals (except U+00D7) -> lowercase
    if (i + 1 < word.size() && static_cast<unsigned char>(word[i]) == 0xC3) {
      auto next = static_cast<unsigned char>(word[i + 1]);
      if (next >= 0x80 && next <= 0x9E && next != 0x97) {
        out.push_back(word[i]);
        out.push_back(static_cast<char>(next + 0x20));
        ++i;
        continue;
      }
    }
    char c = word[i];
    out.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c + 32) : c);
  }
  return out;
}

}  // namespace

bool is_vowel(std::string_view phoneme) {
  if (!phoneme.empty() && phoneme.back() >= '0' && phoneme.back() <= '2') phoneme.remove_suffix(1);
  return is_vowel_base(phoneme);
}

RhymePart rhyme_part(std::span<const std::string> variant) {
  std::optional<std::size_t> last_vowel, last_stressed;
  for (std::size_t i = 0; i < variant.size(); ++i) {
    const auto& ph = variant[i];
    if (!is_vowel(ph)) continue;
    last_vowel = i;
    if (ph.back() == '1' || ph.back() == '2') last_stressed = i;
  }
  auto start = last_stressed ? last_stressed : last_vowel;
  if (!start) throw Error("no syllabic nucleus");
  return RhymePart{Phonemes(variant.begin() + static_cast<std::ptrdiff_t>(*start), variant.end())};
}

std::string stress_pattern(std::span<const std::string> variant) {
  std::string out;
  for (const auto& ph : variant) {
    if (!is_vowel(ph)) continue;
    char d = ph.back();
    out.push_back(d >= '0' && d <= '2' ? d : '0');
  }
  return out;
}

Dictionary Dictionary::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read pronouncing dictionary " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

Dictionary Dictionary::parse(std::string_view contents) {
  Dictionary dict;
  dict.checksum_ = sha256_hex(contents);
  for (auto raw : text::split_lines(contents)) {
    std::string line = text::is_valid_utf8(raw) ? std::string(raw) : text::latin1_to_utf8(raw);
    if (line.starts_with(";;;")) continue;
    if (auto hash = line.find(" #"); hash != std::string::npos) line.resize(hash);
    auto body = text::trim(line);
    if (body.empty()) continue;

    std::istringstream fields{std::string(body)};
    std::string head;
    fields >> head;
    Phonemes phones;
    bool ok = true;
    for (std::string ph; fields >> ph;) {
      if (!is_valid_phoneme(ph)) {
        ok = false;
        break;
      }
      phones.push_back(std::move(ph));
    }
    if (!ok || phones.empty() || head.empty()) {
      ++dict.skipped_;
      continue;
    }
    // Strip a "(n)" variant marker.
    if (head.back() == ')') {
      auto open = head.rfind('(');
      if (open != std::string::npos && open > 0) head.resize(open);
    }
    auto key = fold_key(head);
    auto& entry = dict.entries_[key];
    entry.word = key;
    entry.variants.push_back(std::move(phones));
  }
  return dict;
}

const PronunciationEntry* Dictionary::lookup(std::string_view word) const {
  auto it = entries_.find(fold_key(word));
  return it == entries_.end() ? nullptr : &it->second;
}

std::optional<std::vector<std::size_t>> Dictionary::syllable_count(std::string_view word) const {
  const auto* entry = lookup(word);
  if (!entry) return std::nullopt;
  std::vector<std::size_t> counts;
  for (const auto& v : entry->variants)
    counts.push_back(static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](const auto& p) { return is_vowel(p); })));
  return counts;
}

std::vector<std::string> Dictionary::words() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& [k, _] : entries_) out.push_back(k);
  std::sort(out.begin(), out.end());
  return out;
}

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1)
    throw Error("sha256 failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xF]);
  }
  return out;
}

}  // namespace poetics
