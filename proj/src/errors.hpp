#pragma once

#include <stdexcept>
#include <string>

namespace submax {

// Invalid parameters or parameter combinations, detected before any
// oracle work is done.
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// File access or parse failures; messages carry the offending path and,
// for parse failures, the 1-based line number.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace submax
