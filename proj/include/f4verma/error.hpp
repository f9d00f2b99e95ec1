#pragma once

#include <stdexcept>
#include <string>

namespace f4verma {

/// Violation of an internal invariant (states the engine must never reach).
struct InvariantError : std::logic_error {
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

} // namespace f4verma
