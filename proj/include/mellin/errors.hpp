#pragma once

#include <stdexcept>
#include <string>

namespace mellin {

// Argument outside the region where a function or integral is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Result not representable in binary64.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace mellin
