#pragma once

#include <stdexcept>
#include <string>

namespace dspan {

/// Bad arguments, malformed files, violated operation preconditions.
class InputError : public std::invalid_argument {
public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// An exhaustion limit was hit: the answer is unknown, not wrong.
class CapacityError : public std::runtime_error {
public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// A structural guarantee failed; indicates a defective solver or verifier.
class InvariantError : public std::logic_error {
public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

} // namespace dspan
