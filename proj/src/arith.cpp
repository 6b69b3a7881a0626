#include "divpair/arith.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace divpair::arith {

namespace {

const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        const unsigned long limit = 1'000'000;
        std::vector<bool> sieve(limit + 1, true);
        std::vector<unsigned long> out;
        for (unsigned long p = 2; p <= limit; ++p) {
            if (!sieve[p]) continue;
            out.push_back(p);
            for (unsigned long q = p * p; q <= limit; q += p) sieve[q] = false;
        }
        return out;
    }();
    return primes;
}

// Deterministic Miller-Rabin witness set, valid for n < 3.317e24.
constexpr unsigned long kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

const Int& deterministic_limit() {
    static const Int limit("3317044064679887385961980");
    return limit;
}

bool miller_rabin_witness(const Int& n, const Int& base, const Int& d, unsigned long r) {
    Int x;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < r; ++i) {
        mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
        if (x == n - 1) return false;
    }
    return true;  // composite witness found
}

}  // namespace

Congruence::Congruence(Int r, Int m) : residue(std::move(r)), modulus(std::move(m)) {
    if (modulus < 1) throw std::invalid_argument("Congruence: modulus must be positive");
    mpz_mod(residue.get_mpz_t(), residue.get_mpz_t(), modulus.get_mpz_t());
}

bool Congruence::holds_for(const Int& x) const {
    Int r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
    return r == residue;
}

int jacobi(const Int& a, const Int& n) {
    if (n < 1 || mpz_even_p(n.get_mpz_t()))
        throw std::invalid_argument("jacobi: modulus must be odd and positive");
    return mpz_jacobi(a.get_mpz_t(), n.get_mpz_t());
}

Primality classify_prime(const Int& n) {
    if (n < 1) throw std::invalid_argument("classify_prime: n must be positive");
    if (n < 2) return Primality::Composite;
    if (n == 2) return Primality::Prime;
    if (mpz_even_p(n.get_mpz_t())) return Primality::Composite;

    if (n >= deterministic_limit()) {
        // BPSW-style test; no composite below 2^64 (and none known at all)
        // passes, but the verdict is only "probable" out here.
        int r = mpz_probab_prime_p(n.get_mpz_t(), 25);
        return r == 0 ? Primality::Composite : Primality::ProbablePrime;
    }

    Int d = n - 1;
    unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), r);
    for (unsigned long w : kWitnesses) {
        if (n == w) return Primality::Prime;
        if (mpz_divisible_ui_p(n.get_mpz_t(), w)) return Primality::Composite;
        if (miller_rabin_witness(n, Int(w), d, r)) return Primality::Composite;
    }
    return Primality::Prime;
}

bool is_prime(const Int& n) {
    return classify_prime(n) != Primality::Composite;
}

SqrtResult integer_sqrt(const Int& n) {
    if (n < 0) throw std::invalid_argument("integer_sqrt: negative input");
    SqrtResult res;
    Int rem;
    mpz_sqrtrem(res.root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    res.exact = (rem == 0);
    return res;
}

Congruence crt_solve(const std::vector<Congruence>& system) {
    if (system.empty()) throw std::invalid_argument("crt_solve: empty system");
    Congruence acc = system.front();
    for (std::size_t i = 1; i < system.size(); ++i) {
        const Congruence& next = system[i];
        // Merge x == r1 (mod m1) with x == r2 (mod m2); moduli may share factors.
        Int g, p, q;
        mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(),
                   acc.modulus.get_mpz_t(), next.modulus.get_mpz_t());
        Int diff = next.residue - acc.residue;
        if (!mpz_divisible_p(diff.get_mpz_t(), g.get_mpz_t())) {
            std::ostringstream msg;
            msg << "crt_solve: no solution; x == " << acc.residue << " (mod " << acc.modulus
                << ") conflicts with x == " << next.residue << " (mod " << next.modulus << ")";
            throw NoSolutionError(msg.str());
        }
        Int lcm = acc.modulus / g * next.modulus;
        Int x = acc.residue + acc.modulus * (diff / g % (next.modulus / g)) * p;
        acc = Congruence(std::move(x), std::move(lcm));
    }
    return acc;
}

Int FactorMultiset::value() const {
    Int v = 1;
    for (const auto& [p, e] : factors) {
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        v *= pe;
    }
    return v;
}

std::size_t FactorMultiset::divisor_count() const {
    std::size_t c = 1;
    for (const auto& [p, e] : factors) c *= e + 1;
    return c;
}

namespace {

unsigned long rho_seed = 0x5eed;

// Brent's cycle variant of Pollard rho. Returns a nontrivial factor of odd
// composite n, or nothing within the iteration budget.
std::optional<Int> pollard_rho(const Int& n, std::uint64_t& budget, gmp_randstate_t rng) {
    while (budget > 0) {
        Int c, y;
        mpz_urandomm(c.get_mpz_t(), rng, n.get_mpz_t());
        mpz_urandomm(y.get_mpz_t(), rng, n.get_mpz_t());
        if (c == 0) c = 1;
        Int x, q = 1, g = 1, ys;
        const unsigned long block = 128;
        unsigned long r = 1;
        while (g == 1 && budget > 0) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            for (unsigned long j = 0; j < r && g == 1 && budget > 0; j += block) {
                ys = y;
                unsigned long lim = std::min(block, r - j);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * (x > y ? x - y : y - x) % n;
                }
                budget = budget > lim ? budget - lim : 0;
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack one step at a time
            do {
                ys = (ys * ys + c) % n;
                Int diff = x > ys ? x - ys : ys - x;
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n && g != 1) return g;
        // bad parameter choice; retry with fresh (c, y)
    }
    return std::nullopt;
}

void factor_into(const Int& n, std::vector<Int>& primes, std::uint64_t& budget,
                 gmp_randstate_t rng) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    auto f = pollard_rho(n, budget, rng);
    if (!f) throw BudgetError("factorize: rho budget exhausted on " + n.get_str());
    factor_into(*f, primes, budget, rng);
    factor_into(n / *f, primes, budget, rng);
}

}  // namespace

void set_rho_seed(unsigned long seed) { rho_seed = seed; }

FactorMultiset factorize(const Int& n, std::uint64_t rho_budget) {
    if (n < 2) throw std::invalid_argument("factorize: n must be >= 2");
    Int rest = n;
    std::vector<Int> primes;
    for (unsigned long p : small_primes()) {
        if (Int(p) * p > rest) break;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            primes.emplace_back(p);
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        }
    }
    if (rest > 1) {
        gmp_randstate_t rng;
        gmp_randinit_mt(rng);
        gmp_randseed_ui(rng, rho_seed);  // fixed default: runtime varies, results never
        std::uint64_t budget = rho_budget;
        try {
            factor_into(rest, primes, budget, rng);
        } catch (...) {
            gmp_randclear(rng);
            throw;
        }
        gmp_randclear(rng);
    }
    std::sort(primes.begin(), primes.end());
    FactorMultiset out;
    for (const Int& p : primes) {
        if (!out.factors.empty() && out.factors.back().first == p)
            ++out.factors.back().second;
        else
            out.factors.emplace_back(p, 1);
    }
    return out;
}

std::vector<Int> divisors(const Int& n, std::uint64_t rho_budget) {
    if (n < 1) throw std::invalid_argument("divisors: n must be positive");
    std::vector<Int> out{1};
    if (n == 1) return out;
    for (const auto& [p, e] : factorize(n, rho_budget).factors) {
        std::size_t base = out.size();
        Int pk = 1;
        for (unsigned i = 0; i < e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace divpair::arith
