#pragma once

#include <stdexcept>
#include <string>

namespace divpair {

// Resource limit hit (digit budget, factorization retry budget). CLI exit code 2.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A congruence system with no solution; the message names a conflicting pair.
struct NoSolutionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A verified identity failed at runtime (congruence gate, divisibility check).
// CLI exit code 1.
struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// delta = 0, 2 (mod 8): the case analysis of the minus-two family does not
// apply; these classes are open.
struct UnsupportedDeltaError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace divpair
