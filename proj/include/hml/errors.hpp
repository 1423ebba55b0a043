#pragma once

#include <stdexcept>
#include <string>

namespace hml {

// Argument outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Moment vector on (or beyond) the boundary of its moment space.
// `order` is the first moment order at which the violation was detected.
struct BoundaryError : std::runtime_error {
  int order;
  BoundaryError(const std::string& what, int order_)
      : std::runtime_error(what), order(order_) {}
};

// Symmetric factorization hit a nonpositive pivot. `index` is the 0-based
// pivot position that failed.
struct PivotError : std::runtime_error {
  int index;
  PivotError(const std::string& what, int index_)
      : std::runtime_error(what), index(index_) {}
};

// Malformed experiment or CLI configuration.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace hml
