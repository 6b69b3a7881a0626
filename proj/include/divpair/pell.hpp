#pragma once

#include <cstddef>
#include <vector>

#include "divpair/arith.hpp"

namespace divpair::pell {

inline constexpr std::size_t kDefaultDigitBudget = 10'000'000;

// Periodic continued fraction of sqrt(D): [a0; period...].
// The last period element is 2*a0; the rest is a palindrome.
struct CFExpansion {
    Int D;
    Int a0;
    std::vector<Int> period;
};

// U^2 - D*V^2 = 1, asserted on construction.
struct PellSolution {
    Int D;
    Int U;
    Int V;

    PellSolution(Int D_, Int U_, Int V_);

    std::size_t u_digits() const;
    std::size_t v_digits() const;
};

// Number of decimal digits and the first `lead` significant digits, for
// comparing magnitudes without printing megabyte values.
std::size_t digit_count(const Int& v);
std::string leading_digits(const Int& v, std::size_t lead = 6);

// Minimal period expansion via the PQa recurrence.
// Throws std::invalid_argument (naming the root) for perfect squares.
CFExpansion cf_sqrt(const Int& D);

// Minimal solution with U, V > 0, from the CF convergents.
// Aborts with BudgetError once convergents exceed digit_budget digits.
PellSolution pell_fundamental(const Int& D, std::size_t digit_budget = kDefaultDigitBudget);

// m-th solution: U_m + V_m*sqrt(D) = (U_1 + V_1*sqrt(D))^m, by binary
// composition. m = 0 gives the trivial (1, 0).
PellSolution pell_iterate(const PellSolution& fund, unsigned long m);

// U_m for D = delta^2 - 2: U_0 = 1, U_1 = delta^2 - 1,
// U_{m+2} = 2(delta^2-1) U_{m+1} - U_m.
Int u_sequence(long delta, unsigned long m);

}  // namespace divpair::pell
