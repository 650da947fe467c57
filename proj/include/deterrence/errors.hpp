#pragma once

#include <stdexcept>
#include <string>

namespace deterrence {

// Bad input: malformed vectors, out-of-range probabilities, empty batteries.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// Filesystem failures while reading or writing artifacts.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace deterrence
