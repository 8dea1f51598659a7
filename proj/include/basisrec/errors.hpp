#pragma once

#include <stdexcept>
#include <string>

namespace basisrec {

// Invalid user input: malformed files, violated operation preconditions,
// infeasible basis sequences. The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A brute-force helper refused to run because a size cap was exceeded.
// Never a silent truncation.
class CapExceededError : public InputError {
 public:
  explicit CapExceededError(const std::string& what) : InputError(what) {}
};

}  // namespace basisrec
