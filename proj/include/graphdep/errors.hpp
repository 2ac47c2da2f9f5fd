#pragma once

#include <stdexcept>
#include <string>

namespace graphdep {

/// Raised when an input violates a structural precondition (bad edge,
/// non-disjoint sets, malformed cover, ...).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an exact computation is refused because the instance exceeds
/// the configured size limit. The message names the limit.
class SizeLimitError : public std::runtime_error {
 public:
  explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace graphdep
