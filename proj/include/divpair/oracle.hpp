#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "divpair/plus_two.hpp"

namespace divpair::oracle {

struct ScanResult {
    long delta = 0;
    long epsilon = 0;
    Int n_max;
    std::vector<DivisorTriple> witnesses;
    unsigned long scanned = 0;
    std::optional<Int> stopped_at;  // set when the factor budget ran out early
};

// require_gt1 selects the d1, d2 > 1 convention (minus-two family); the
// plus-two examples allow d1 = 1.
bool verify_triple(const DivisorTriple& t, bool require_gt1 = false);

// All pairs d1 <= d2 of divisors of (n^2+1)/2 with d1 + d2 = delta*n + epsilon.
std::vector<std::pair<Int, Int>> find_divisor_pairs(
    const Int& n, long delta, long epsilon,
    std::uint64_t rho_budget = arith::kDefaultRhoBudget);

// Exhaustive scan over odd n <= n_max; witnesses in ascending n order.
ScanResult scan(long delta, long epsilon, const Int& n_max, bool require_gt1,
                unsigned workers = 1,
                std::uint64_t rho_budget = arith::kDefaultRhoBudget);

}  // namespace divpair::oracle
