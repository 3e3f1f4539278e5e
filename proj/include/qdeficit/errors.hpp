#pragma once

#include <stdexcept>
#include <string>

namespace qdeficit {

// Malformed or out-of-contract input. The CLI maps this to exit code 2.
class InvalidArgument : public std::invalid_argument {
 public:
  explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

// A numerical routine failed to reach its tolerance (e.g. eigensolver
// non-convergence). The CLI maps this to exit code 3.
class NumericFailure : public std::runtime_error {
 public:
  explicit NumericFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qdeficit
