#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fricke {

// Generator index or rank outside the supported range.
struct rank_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Structurally valid input that violates an operation's precondition.
struct domain_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Malformed text input; `position` is the 0-based offset of the offending character.
struct parse_error : std::runtime_error {
  std::size_t position;
  parse_error(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

}  // namespace fricke
