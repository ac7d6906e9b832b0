#pragma once

#include <stdexcept>

namespace envsieve {

// Bad arguments or malformed configuration. Mapped to exit code 2 by the CLI.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Inputs violate a theorem hypothesis (e.g. N < 1000). Not a falsification:
// the statement simply does not apply. Mapped to exit code 2.
struct HypothesisError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An enumeration or grid exceeded its configured budget.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A floating-point cross-check left a residual too large to trust.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A proved bound failed inside the implementation: a bug, not a math event.
struct InternalCheckError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace envsieve
