#pragma once

#include <vector>

#include "divpair/pell.hpp"

namespace divpair {

// (n, d1, d2) with d1 <= d2, both dividing (n^2+1)/2, d1 + d2 = delta*n + epsilon.
struct DivisorTriple {
    Int n;
    Int d1;
    Int d2;
    long delta = 0;
    long epsilon = 0;

    bool operator==(const DivisorTriple&) const = default;
};

namespace plus_two {

// Integer quadratic c2*t^2 + c1*t + c0, c2 != 0.
struct MonicLikeQuadratic {
    Int c2;
    Int c1;
    Int c0;
};

// n = (2(delta+1)U - delta(delta+2)) / (delta^2 - 2).
// Throws std::invalid_argument when the quotient is not a positive integer
// (U is not a sequence member with m >= 1).
Int n_from_u(long delta, const Int& U);

// The m-th triple of the epsilon = delta + 2 family.
DivisorTriple triple_at(long delta, unsigned long m,
                        std::size_t digit_budget = pell::kDefaultDigitBudget);

// Triples for m = 1..count; d2 of each entry equals d1 of the next.
std::vector<DivisorTriple> triple_chain(long delta, unsigned long count,
                                        std::size_t digit_budget = pell::kDefaultDigitBudget);

// 2t^2 - 2(delta*n + delta + 2)t + (n^2 + 1): the divisor-pair quadratic with
// cleared denominators.
MonicLikeQuadratic quadratic_for(long delta, const Int& n);

// 4x4 Sylvester determinant; zero iff the quadratics share a root.
Int resultant_2x2(const MonicLikeQuadratic& f, const MonicLikeQuadratic& g);

// delta^4 - 2*delta^2*(U_m*U_{m-1} + 1) + (U_m + U_{m-1})^2 == 0, exactly.
bool resultant_identity_check(long delta, unsigned long m);

}  // namespace plus_two
}  // namespace divpair
