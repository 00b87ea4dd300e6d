#pragma once

#include <stdexcept>

namespace ecgame {

/// Malformed or inconsistent input (bad instance data, size guard exceeded).
class ValidationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A certificate or closed form failed to re-verify against its brute-force
/// counterpart. Always indicates a library bug, never bad input.
class ConsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace ecgame
