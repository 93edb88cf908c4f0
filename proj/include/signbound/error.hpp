#pragma once

#include <stdexcept>
#include <string>

namespace signbound {

/// Raised when an argument violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an analytic object is numerically zero (or det F vanishes)
/// and the requested measure is undefined.
class DegenerateInput : public std::domain_error {
 public:
  explicit DegenerateInput(const std::string& what) : std::domain_error(what) {}
};

}  // namespace signbound
