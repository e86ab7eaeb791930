#pragma once

#include <stdexcept>
#include <string>

namespace permcount {

// A restricted closed-form counter was invoked outside its validity range.
// Distinct from std::domain_error so callers (the CLI in particular) can
// map it to a dedicated exit code.
class FormulaRangeError : public std::runtime_error {
 public:
  explicit FormulaRangeError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration guard tripped: the instance is too large to list.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Bad request shape: unknown method, inadmissible method/arrangement
// combination, malformed cap spec.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace permcount
