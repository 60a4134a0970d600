#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace poetics::text {

bool is_space(char c);

std::string_view trim(std::string_view s);
std::string_view trim_right(std::string_view s);

bool is_blank(std::string_view line);

// Splits on '\n'. A trailing newline does not produce a final empty line.
std::vector<std::string_view> split_lines(std::string_view s);

std::string normalize_newlines(std::string_view s);

std::string ascii_lower(std::string_view s);

bool starts_with_icase(std::string_view s, std::string_view prefix);

std::string expand_tabs(std::string_view s, int width = 4);

// Number of code points; invalid bytes count as one each.
std::size_t utf8_length(std::string_view s);

// Splits a UTF-8 string into per-code-point slices.
std::vector<std::string_view> utf8_chars(std::string_view s);

bool is_valid_utf8(std::string_view s);

std::string latin1_to_utf8(std::string_view s);

}  // namespace poetics::text
