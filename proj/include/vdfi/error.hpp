#pragma once

#include <stdexcept>
#include <string>

namespace vdfi {

/// Raised when an input or a documented precondition is violated
/// (malformed graph text, theorem hypotheses not met, unknown function spec).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Internal consistency failure. Never caused by user input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void ensure(bool condition, const std::string& what) {
  if (!condition) throw InternalError(what);
}

}  // namespace vdfi
