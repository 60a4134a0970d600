#pragma once

#include <stdexcept>
#include <string>

namespace poetics {

// Raised by every module for invalid input or unusable data. The message is
// meant to be shown to the user as-is.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace poetics
