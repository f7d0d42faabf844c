#pragma once

#include <stdexcept>

namespace tvcable {

/// Rejected input: even level, even cabling slope, malformed knot spec, ...
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numeric routine could not produce a trustworthy result.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tvcable
