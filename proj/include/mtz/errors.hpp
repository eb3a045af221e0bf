#pragma once

#include <stdexcept>
#include <string>

namespace mtz {

/// Input outside the domain where a quantity is defined or evaluated
/// (divergent series, Re(z) < 1, non-primitive character, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// A configured work budget would be exceeded.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace mtz
