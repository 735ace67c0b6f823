#pragma once

#include <stdexcept>
#include <string>

namespace qbci {

/// Thrown when an exhaustive search or exact computation would exceed its
/// configured guard bound. Never used to report a verdict.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when two supposedly-agreeing computation routes disagree, or an
/// internal exactness check fails (e.g. a coefficient that must be an
/// integer is not one within tolerance).
class ConsistencyError : public std::runtime_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qbci
