#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace poetics {

struct TokenStream {
  std::vector<std::string> tokens;      // lowercased
  std::string original_case_first;      // first token as written, empty if none
};

// Word tokens are maximal runs of letters, digits and apostrophes. Curly
// apostrophes fold to '\''; apostrophes at either edge of a run are trimmed.
// Non-ASCII letters are kept; ASCII and Latin-1 capitals are lowercased.
TokenStream tokenize(std::string_view text);

// Convenience for callers that only need the lowercased tokens.
std::vector<std::string> tokens_of(std::string_view text);

}  // namespace poetics
