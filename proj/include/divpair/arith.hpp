#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "divpair/errors.hpp"

namespace divpair {

using Int = mpz_class;

namespace arith {

// x == residue (mod modulus), canonical: 0 <= residue < modulus.
struct Congruence {
    Int residue;
    Int modulus;

    Congruence() = default;
    Congruence(Int r, Int m);

    bool holds_for(const Int& x) const;
    bool operator==(const Congruence&) const = default;
};

// Jacobi symbol (a/n), n odd positive. Equals the Legendre symbol for prime n.
int jacobi(const Int& a, const Int& n);

enum class Primality { Composite, Prime, ProbablePrime };

// Deterministic below 3.317e24 (fixed Miller-Rabin witness set); ProbablePrime
// beyond that threshold.
Primality classify_prime(const Int& n);
bool is_prime(const Int& n);

struct SqrtResult {
    Int root;   // floor(sqrt(n))
    bool exact; // root*root == n
};
SqrtResult integer_sqrt(const Int& n);

// Combined congruence for the whole system; moduli need not be coprime.
// Throws NoSolutionError (naming a conflicting pair) if inconsistent.
Congruence crt_solve(const std::vector<Congruence>& system);

struct FactorMultiset {
    // (prime, exponent), primes strictly increasing.
    std::vector<std::pair<Int, unsigned>> factors;

    Int value() const;
    std::size_t divisor_count() const;
};

inline constexpr std::uint64_t kDefaultRhoBudget = 50'000'000;

// Seed for the randomized restarts of Brent's rho. Changes runtime only:
// factorizations are certified, so results never depend on it.
void set_rho_seed(unsigned long seed);

// Complete certified factorization: trial division to 1e6, then Brent's rho.
// Exhausting the rho retry budget is a BudgetError.
FactorMultiset factorize(const Int& n, std::uint64_t rho_budget = kDefaultRhoBudget);

// All divisors of n in increasing order.
std::vector<Int> divisors(const Int& n, std::uint64_t rho_budget = kDefaultRhoBudget);

}  // namespace arith
}  // namespace divpair
