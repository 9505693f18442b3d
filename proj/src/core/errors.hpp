#pragma once

#include <stdexcept>

namespace schub {

// Violated precondition or mathematically inconsistent input.
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual or JSON input.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace schub
