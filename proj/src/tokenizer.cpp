#include "poetics/tokenizer.hpp"

#include <cstdint>

namespace poetics {
namespace {

struct CodePoint {
  char32_t value;
  std::size_t length;
};

CodePoint decode(std::string_view s, std::size_t i) {
  auto b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) return {b0, 1};
  auto cont = [&](std::size_t k) -> int {
    if (i + k >= s.size()) return -1;
    auto b = static_cast<unsigned char>(s[i + k]);
    return (b & 0xC0) == 0x80 ? (b & 0x3F) : -1;
  };
  if (b0 >= 0xC0 && b0 < 0xE0) {
    int c1 = cont(1);
    if (c1 >= 0) return {static_cast<char32_t>(((b0 & 0x1F) << 6) | c1), 2};
  } else if (b0 >= 0xE0 && b0 < 0xF0) {
    int c1 = cont(1), c2 = cont(2);
    if (c1 >= 0 && c2 >= 0) return {static_cast<char32_t>(((b0 & 0x0F) << 12) | (c1 << 6) | c2), 3};
  } else if (b0 >= 0xF0 && b0 < 0xF8) {
    int c1 = cont(1), c2 = cont(2), c3 = cont(3);
    if (c1 >= 0 && c2 >= 0 && c3 >= 0)
      return {static_cast<char32_t>(((b0 & 0x07) << 18) | (c1 << 12) | (c2 << 6) | c3), 4};
  }
  // Stray byte: treat as a separator.
  return {0xFFFD, 1};
}

bool is_apostrophe(char32_t c) { return c == U'\'' || c == 0x2019 || c == 0x2018; }

bool is_word_char(char32_t c) {
  if (c < 0x80) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
  }
  if (c < 0xC0 || c == 0xD7 || c == 0xF7 || c == 0xFFFD) return false;
  if (c >= 0x2000 && c <= 0x2BFF) return false;  // punctuation, symbols, arrows
  if (c >= 0x3000 && c <= 0x303F) return false;
  if (c >= 0xFE30 && c <= 0xFE4F) return false;
  if (c >= 0xFF00 && c <= 0xFF0F) return false;
  if (c >= 0x1F000 && c <= 0x1FAFF) return false;  // emoji
  return true;
}

void append_lower(std::string& out, std::string_view raw, char32_t c) {
  if (c < 0x80) {
    out.push_back(static_cast<char>(c >= 'A' && c <= 'Z' ? c + 32 : c));
  } else if (c >= 0xC0 && c <= 0xDE && c != 0xD7) {
    char32_t lower = c + 0x20;
    out.push_back(static_cast<char>(0xC0 | (lower >> 6)));
    out.push_back(static_cast<char>(0x80 | (lower & 0x3F)));
  } else {
    out.append(raw);
  }
}

std::string_view trim_apostrophes(std::string_view s) {
  while (!s.empty() && s.front() == '\'') s.remove_prefix(1);
  while (!s.empty() && s.back() == '\'') s.remove_suffix(1);
  return s;
}

}  // namespace

TokenStream tokenize(std::string_view text) {
  TokenStream out;
  std::string lower, original;
  auto flush = [&] {
    auto t = trim_apostrophes(lower);
    if (!t.empty()) {
      if (out.tokens.empty()) out.original_case_first = std::string(trim_apostrophes(original));
      out.tokens.emplace_back(t);
    }
    lower.clear();
    original.clear();
  };
  for (std::size_t i = 0; i < text.size();) {
    auto cp = decode(text, i);
    auto raw = text.substr(i, cp.length);
    if (is_apostrophe(cp.value)) {
      lower.push_back('\'');
      original.push_back('\'');
    } else if (is_word_char(cp.value)) {
      append_lower(lower, raw, cp.value);
      original.append(raw);
    } else {
      flush();
    }
    i += cp.length;
  }
  flush();
  return out;
}

std::vector<std::string> tokens_of(std::string_view text) { return tokenize(text).tokens; }

}  // namespace poetics
