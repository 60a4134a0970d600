#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace poetics::csv {

struct Row {
  std::vector<std::string> fields;
  std::size_t line = 0;  // 1-based physical line where the row starts
};

// RFC 4180 reader: quoted fields may contain commas, doubled quotes and
// newlines. Throws poetics::Error on an unterminated quote.
std::vector<Row> parse(std::string_view data);

std::string escape(std::string_view field);

void write_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace poetics::csv
