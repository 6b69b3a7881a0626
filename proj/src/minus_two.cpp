#include "divpair/minus_two.hpp"

#include <algorithm>
#include <future>
#include <sstream>

namespace divpair::minus_two {

namespace {

constexpr char role_char(PrimeRole r) {
    switch (r) {
        case PrimeRole::A: return 'a';
        case PrimeRole::B: return 'b';
        case PrimeRole::C: return 'c';
    }
    return '?';
}

// Factorization case i: (U0 + sigma) = cP * prod(P) * s^2, (U0 - sigma) = cQ * prod(Q) * t^2.
struct CaseShape {
    int cP;
    std::vector<PrimeRole> P;
    int cQ;
    std::vector<PrimeRole> Q;
};

CaseShape case_shape(int index) {
    using R = PrimeRole;
    static const std::vector<R> all{R::A, R::B, R::C};
    switch (index) {
        case 1: return {2, all, 4, {}};
        case 2: return {4, all, 2, {}};  // the 2/4 coefficients swap sides here
        case 3: return {2, {R::A, R::B}, 4, {R::C}};
        case 4: return {2, {R::A, R::C}, 4, {R::B}};
        case 5: return {2, {R::B, R::C}, 4, {R::A}};
        case 6: return {2, {R::A}, 4, {R::B, R::C}};
        case 7: return {2, {R::B}, 4, {R::A, R::C}};
        case 8: return {2, {R::C}, 4, {R::A, R::B}};
    }
    throw std::invalid_argument("case index out of range");
}

// Quadratic-residue requirements implied by the factorization: for p on the
// s-side, U0 == -sigma (mod p) and the t-side equation forces
// t^2 == -2*sigma / (cQ * Q) (mod p); symmetrically for the t-side primes.
std::vector<JacobiCondition> case_conditions(int index, int sigma) {
    CaseShape sh = case_shape(index);
    std::vector<JacobiCondition> out;
    for (PrimeRole p : sh.P) {
        JacobiCondition c;
        c.sign = -sigma;
        c.pow2 = 1 + (sh.cQ == 2 ? 1 : 2);
        c.numerator = sh.Q;
        c.modulus = p;
        out.push_back(std::move(c));
    }
    for (PrimeRole p : sh.Q) {
        JacobiCondition c;
        c.sign = sigma;
        c.pow2 = 1 + (sh.cP == 2 ? 1 : 2);
        c.numerator = sh.P;
        c.modulus = p;
        out.push_back(std::move(c));
    }
    return out;
}

int roles_product_mod8(const std::vector<PrimeRole>& roles, const std::array<int, 3>& abc) {
    int v = 1;
    for (PrimeRole r : roles) v = v * abc[static_cast<int>(r)] % 8;
    return v;
}

// Residue-determined part of a Jacobi symbol: (-1/p) from p mod 4, (2/p) from
// p mod 8. Only meaningful for conditions with an empty prime numerator.
int jacobi_sign_two(int sign, int pow2, int p_mod8) {
    int v = 1;
    if (sign < 0 && p_mod8 % 4 == 3) v = -v;
    if (pow2 % 2 == 1 && (p_mod8 == 3 || p_mod8 == 5)) v = -v;
    return v;
}

bool mod8_solvable(int index, int sigma, const std::array<int, 3>& abc) {
    CaseShape sh = case_shape(index);
    // Divide the two-sided system's difference by 2:
    //   (cP/2) P s^2 - (cQ/2) Q t^2 == sigma (mod 8)
    int lhsP = (sh.cP / 2) * roles_product_mod8(sh.P, abc) % 8;
    int lhsQ = (sh.cQ / 2) * roles_product_mod8(sh.Q, abc) % 8;
    for (int s = 0; s < 8; ++s)
        for (int t = 0; t < 8; ++t)
            if (((lhsP * s * s - lhsQ * t * t - sigma) % 8 + 8) % 8 == 0) return true;
    return false;
}

}  // namespace

std::string JacobiCondition::describe() const {
    std::string num;
    if (sign < 0) num += '-';
    if (pow2 % 2 == 1) num += '2';
    for (PrimeRole r : numerator) num += role_char(r);
    if (num.empty() || num == "-") num += '1';
    return "(" + num + "/" + role_char(modulus) + ")";
}

std::string CaseStatus::id() const {
    return std::to_string(index) + (sign > 0 ? "+" : "-");
}

MinusTwoParams derive_params(long delta, const Int& k) {
    if (delta % 2 != 0 || delta < 4)
        throw std::invalid_argument("derive_params: delta must be even and >= 4");
    if (k < 1) throw std::invalid_argument("derive_params: k must be >= 1");
    MinusTwoParams p;
    p.delta = delta;
    p.k = k;
    Int d(delta);
    p.g = (d * d - 2 * d + 2) / 2;
    p.d = 2 * k * k - 2 * k + 1;
    p.a = p.d;
    p.b = d * k - 1;
    p.c = d * k - d + 1;
    p.epsilon = delta - 2;
    // g == delta^2/2 - delta + 1 == A, and g == d == 1 (mod 4)
    if (p.g != d * d / 2 - d + 1 || p.g % 4 != 1 || p.d % 4 != 1)
        throw ConstructionError("derive_params: invariant violated");
    return p;
}

Int pell_modulus(const MinusTwoParams& params) {
    return 2 * params.a * params.b * params.c;
}

std::vector<CaseStatus> mod8_case_table(int delta_mod8, int k_mod8) {
    if (delta_mod8 % 2 != 0 || delta_mod8 < 0 || delta_mod8 > 7)
        throw std::invalid_argument("mod8_case_table: delta residue must be even, in [0,8)");
    if (k_mod8 < 0 || k_mod8 > 7)
        throw std::invalid_argument("mod8_case_table: k residue must be in [0,8)");
    const std::array<int, 3> abc = {
        (2 * k_mod8 * k_mod8 - 2 * k_mod8 + 1) % 8,
        ((delta_mod8 * k_mod8 - 1) % 8 + 8) % 8,
        ((delta_mod8 * k_mod8 - delta_mod8 + 1) % 8 + 8) % 8,
    };
    std::vector<CaseStatus> table;
    for (int index = 1; index <= 8; ++index) {
        for (int sigma : {+1, -1}) {
            CaseStatus cs;
            cs.index = index;
            cs.sign = sigma;
            if (index == 2 && sigma == -1) {
                // t^2 - 2abc s^2 = 1 with t < U0
                cs.verdict = Verdict::ImpossibleMinimality;
            } else if (!mod8_solvable(index, sigma, abc)) {
                cs.verdict = Verdict::ImpossibleMod8;
            } else {
                cs.conditions = case_conditions(index, sigma);
                bool dead = false;
                bool all_determined = true;
                for (const auto& c : cs.conditions) {
                    if (!c.numerator.empty()) {
                        all_determined = false;
                        continue;
                    }
                    if (jacobi_sign_two(c.sign, c.pow2, abc[static_cast<int>(c.modulus)]) == -1)
                        dead = true;
                }
                if (dead)
                    cs.verdict = Verdict::ImpossibleMod8;
                else
                    cs.verdict = all_determined ? Verdict::Possible : Verdict::Conditional;
            }
            table.push_back(std::move(cs));
        }
    }
    return table;
}

namespace {

int eval_condition(const JacobiCondition& c, const MinusTwoParams& p) {
    const std::array<const Int*, 3> vals = {&p.a, &p.b, &p.c};
    Int num = c.sign;
    for (int i = 0; i < c.pow2; ++i) num *= 2;
    for (PrimeRole r : c.numerator) num *= *vals[static_cast<int>(r)];
    return arith::jacobi(num, *vals[static_cast<int>(c.modulus)]);
}

}  // namespace

std::vector<std::string> legendre_filter(const MinusTwoParams& params,
                                         const std::vector<CaseStatus>& table) {
    if (!arith::is_prime(params.a) || !arith::is_prime(params.b) || !arith::is_prime(params.c))
        throw std::invalid_argument("legendre_filter: a, b, c must all be prime");
    std::vector<std::string> surviving;
    for (const CaseStatus& cs : table) {
        if (cs.verdict == Verdict::ImpossibleMod8 || cs.verdict == Verdict::ImpossibleMinimality)
            continue;
        bool alive = true;
        for (const auto& c : cs.conditions)
            if (eval_condition(c, params) == -1) alive = false;
        if (alive) surviving.push_back(cs.id());
    }
    return surviving;
}

KConditionReport check_k_conditions(long delta, const Int& k) {
    long r = ((delta % 8) + 8) % 8;
    if (r != 4 && r != 6)
        throw UnsupportedDeltaError(
            "check_k_conditions: delta == " + std::to_string(r) +
            " (mod 8) is an open case; no condition set applies (use construct --force to explore)");
    MinusTwoParams p = derive_params(delta, k);
    Int d(delta);
    Int A = d * d / 2 - d + 1;
    KConditionReport rep;
    rep.k = k;
    if (r == 4) {
        Int B = d / 2 - 1;
        rep.cond[0] = (k % 8 == 3);
        int jA = arith::jacobi(p.c, A);
        rep.jacobi_values["(c/A)"] = jA;
        rep.cond[1] = (jA == -1);
        int jB = B == 1 ? 1 : arith::jacobi(p.c, B);
        rep.jacobi_values["(c/B)"] = jB;
        rep.cond[2] = (jB == 1);
    } else {
        Int B = (d - 2) / 4;
        rep.cond[0] = (k % 8 == 2);
        int jA = arith::jacobi(-p.c, A);
        rep.jacobi_values["(-c/A)"] = jA;
        rep.cond[1] = (jA == 1);
        int jB = B == 1 ? 1 : arith::jacobi(-p.c, B);
        rep.jacobi_values["(-c/B)"] = jB;
        rep.cond[2] = (jB == 1);
    }
    rep.cond[3] = arith::is_prime(p.a);
    rep.cond[4] = arith::is_prime(p.b);
    rep.cond[5] = arith::is_prime(p.c);
    rep.all_satisfied = std::all_of(rep.cond.begin(), rep.cond.end(), [](bool b) { return b; });
    return rep;
}

CrtClass build_crt_class(long delta, const std::vector<arith::Congruence>& overrides) {
    long r = ((delta % 8) + 8) % 8;
    if (r != 4 && r != 6)
        throw UnsupportedDeltaError("build_crt_class: delta == " + std::to_string(r) +
                                    " (mod 8) has no CRT construction");
    Int d(delta);
    Int A = d * d / 2 - d + 1;
    Int B = (r == 4) ? Int(d / 2 - 1) : Int((d - 2) / 4);
    auto A_factors = arith::factorize(A).factors;

    if (r == 4 && arith::integer_sqrt(A).exact)
        throw UnsupportedDeltaError("build_crt_class: A=" + A.get_str() +
                                    " is a perfect square; the odd-exponent argument fails");

    auto overridden = [&](const Int& m) {
        for (const auto& o : overrides)
            if (mpz_divisible_p(o.modulus.get_mpz_t(), m.get_mpz_t())) return true;
        return false;
    };

    std::vector<arith::Congruence> system;
    Int p1 = 0;  // odd-exponent prime carrying the nonresidue (delta == 4 mod 8)
    if (r == 4) {
        for (const auto& [p, e] : A_factors)
            if (e % 2 == 1) {
                p1 = p;
                break;
            }
        Int forbidden = (2 - d) % p1;
        if (forbidden < 0) forbidden += p1;
        for (const auto& [p, e] : A_factors) {
            if (overridden(p)) continue;
            if (p == p1) {
                Int x1 = 0;
                for (Int cand = 2; cand < p1; ++cand) {
                    if (arith::jacobi(cand, p1) == -1 && cand != forbidden) {
                        x1 = cand;
                        break;
                    }
                }
                if (x1 == 0)
                    throw ConstructionError("build_crt_class: no admissible nonresidue mod " +
                                            p1.get_str());
                system.emplace_back(x1, p1);
            } else {
                system.emplace_back(1, p);
            }
        }
        if (B > 1 && !overridden(B)) system.emplace_back(1, B);
        system.emplace_back(2 * d + 1, 8 * d);
    } else {
        Int forbidden_base = d - 2;
        for (const auto& [p, e] : A_factors) {
            if (overridden(p)) continue;
            Int forbidden = forbidden_base % p;
            Int xi = 0;
            for (Int cand = 1; cand < p; ++cand) {
                if (arith::jacobi(cand, p) == 1 && cand != forbidden) {
                    xi = cand;
                    break;
                }
            }
            if (xi == 0)
                throw ConstructionError("build_crt_class: no admissible residue mod " +
                                        p.get_str());
            system.emplace_back(xi, p);
        }
        if (B > 1 && !overridden(B)) system.emplace_back(1, B);
        system.emplace_back(-d - 1, 8 * d);
    }
    for (const auto& o : overrides) system.push_back(o);

    arith::Congruence x_class = arith::crt_solve(system);
    const Int& x0 = x_class.residue;

    // Validate the quadratic-character requirements against the combined x.
    if (r == 4) {
        if (arith::jacobi(x0, A) != -1)
            throw ConstructionError("build_crt_class: (x/A) != -1 for x=" + x0.get_str());
        if (B > 1 && arith::jacobi(x0, B) != 1)
            throw ConstructionError("build_crt_class: (x/B) != 1 for x=" + x0.get_str());
        Int forbidden = (2 - d) % p1;
        if (forbidden < 0) forbidden += p1;
        if (x0 % p1 == forbidden)
            throw ConstructionError("build_crt_class: x == 2 - delta (mod " + p1.get_str() + ")");
    } else {
        for (const auto& [p, e] : A_factors) {
            if (arith::jacobi(x0, p) != 1)
                throw ConstructionError("build_crt_class: x is a nonresidue mod " + p.get_str());
            Int forbidden = (d - 2) % p;
            if (x0 % p == forbidden)
                throw ConstructionError("build_crt_class: x == delta - 2 (mod " + p.get_str() +
                                        ")");
        }
        if (B > 1 && arith::jacobi(x0, B) != 1)
            throw ConstructionError("build_crt_class: (x/B) != 1 for x=" + x0.get_str());
    }

    CrtClass cls;
    cls.x_system = std::move(system);
    cls.x_class = x_class;
    cls.modulus = x_class.modulus / d;
    // x == 1 (mod delta) for delta == 4 (mod 8); x == -1 (mod delta) otherwise,
    // so the k conversion is exact.
    cls.k_seed = (r == 4) ? Int((x0 + d - 1) / d) : Int((d - 1 - x0) / d);
    cls.k0 = cls.k_seed % cls.modulus;
    if (cls.k0 < 0) cls.k0 += cls.modulus;
    return cls;
}

namespace {

// Fast path for range search: everything fits in 64 bits for k <= ~2e9.
namespace fast {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
    u64 r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Deterministic for n < 2^64.
bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    u64 dd = n - 1;
    int s = 0;
    while ((dd & 1) == 0) dd >>= 1, ++s;
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, dd, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

const std::array<u64, 46>& sieve_primes() {
    static const std::array<u64, 46> primes = {
        41,  43,  47,  53,  59,  61,  67,  71,  73,  79,  83,  89,  97,  101, 103, 107,
        109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193,
        197, 199, 211, 223, 227, 229, 233, 239, 241, 251, 257, 263, 269, 271};
    return primes;
}

bool fast_prime_check(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL})
        if (n % p == 0) return n == p;
    for (u64 p : sieve_primes())
        if (n % p == 0) return n == p;
    return is_prime_u64(n);
}

}  // namespace fast

bool k_candidate_passes(long delta, const Int& k) {
    // delta validated by the caller; k >= 1
    long r = ((delta % 8) + 8) % 8;
    long want = (r == 4) ? 3 : 2;
    if (k % 8 != want) return false;
    if (k < 2147483648L && delta <= 1000) {
        fast::u64 kk = k.get_ui();
        fast::u64 dd = static_cast<fast::u64>(delta);
        fast::u64 a = 2 * kk * kk - 2 * kk + 1;
        fast::u64 b = dd * kk - 1;
        fast::u64 c = dd * kk - dd + 1;
        if (!fast::fast_prime_check(b) || !fast::fast_prime_check(c) ||
            !fast::fast_prime_check(a))
            return false;
    }
    return check_k_conditions(delta, k).all_satisfied;
}

}  // namespace

std::vector<Int> search_k(long delta, const Int& k_max, const std::optional<CrtClass>& cls,
                          unsigned workers) {
    long r = ((delta % 8) + 8) % 8;
    if (r != 4 && r != 6)
        throw UnsupportedDeltaError("search_k: delta == " + std::to_string(r) +
                                    " (mod 8) is an open case");
    if (workers < 1) workers = 1;

    // Enumerate candidates as k = start + i*step.
    Int start, step;
    if (cls) {
        step = cls->modulus;
        start = cls->k0 == 0 ? cls->modulus : cls->k0;
    } else {
        step = 8;
        start = (r == 4) ? 3 : 2;
    }
    if (start > k_max) return {};
    Int count_z = (k_max - start) / step + 1;
    unsigned long total = count_z.get_ui();

    auto scan_block = [&](unsigned long lo, unsigned long hi) {
        std::vector<Int> found;
        for (unsigned long i = lo; i < hi; ++i) {
            Int k = start + step * static_cast<unsigned long>(i);
            if (k_candidate_passes(delta, k)) found.push_back(std::move(k));
        }
        return found;
    };

    if (workers == 1 || total < 2 * workers) return scan_block(0, total);

    std::vector<std::future<std::vector<Int>>> futures;
    unsigned long block = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        unsigned long lo = w * block;
        unsigned long hi = std::min(total, lo + block);
        if (lo >= hi) break;
        futures.push_back(std::async(std::launch::async, scan_block, lo, hi));
    }
    std::vector<Int> out;
    for (auto& f : futures) {
        auto part = f.get();
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    }
    return out;
}

namespace {

std::string classify_case(const MinusTwoParams& p, const Int& U0) {
    // Residue signatures alone cannot separate, e.g., 3+ from 8- (both put
    // ab | U0+1 and c | U0-1). Decide by the actual decomposition: the case
    // holds exactly when (U0 + sigma)/(cP * prod P) and (U0 - sigma)/(cQ * prod Q)
    // are both perfect squares.
    const std::array<const Int*, 3> vals = {&p.a, &p.b, &p.c};
    auto square_cofactor = [&](Int side, int coeff, const std::vector<PrimeRole>& roles) {
        Int den = coeff;
        for (PrimeRole r : roles) den *= *vals[static_cast<int>(r)];
        if (!mpz_divisible_p(side.get_mpz_t(), den.get_mpz_t())) return false;
        Int q = side / den;
        return arith::integer_sqrt(q).exact;
    };
    for (int index = 1; index <= 8; ++index) {
        for (int sigma : {+1, -1}) {
            CaseShape sh = case_shape(index);
            if (!square_cofactor(U0 + sigma, sh.cP, sh.P)) continue;
            if (!square_cofactor(U0 - sigma, sh.cQ, sh.Q)) continue;
            CaseStatus cs;
            cs.index = index;
            cs.sign = sigma;
            return cs.id();
        }
    }
    return "unknown";
}

}  // namespace

Construction construct_solution(long delta, const Int& k, bool force,
                                std::size_t digit_budget) {
    MinusTwoParams p = derive_params(delta, k);
    long r = ((delta % 8) + 8) % 8;
    if (!force) {
        if (r != 4 && r != 6)
            throw UnsupportedDeltaError("construct_solution: delta == " + std::to_string(r) +
                                        " (mod 8) is an open case; pass force to explore");
        if (!check_k_conditions(delta, k).all_satisfied)
            throw std::invalid_argument(
                "construct_solution: k fails conditions (i)-(vi); pass force to bypass");
    }

    Int D = pell_modulus(p);
    pell::PellSolution fund = pell::pell_fundamental(D, digit_budget);
    const Int& U0 = fund.U;
    const Int& V0 = fund.V;

    Int d(delta);
    Int eps(p.epsilon);
    Int X0 = 2 * p.g * (2 * k - 1) * U0;
    Int gate_mod = 2 * p.b * p.c;
    Int want = p.d * d * eps % gate_mod;
    if (X0 % gate_mod != want)
        throw ConstructionError("construct_solution: congruence gate failed: X0 != d*delta*eps"
                                " (mod 2bc)");

    Int num = X0 - p.d * d * eps;
    Int den = p.d * d * d - 2 * p.g;
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw ConstructionError("construct_solution: n is not integral");
    Int n = num / den;
    if (n <= 0 || mpz_even_p(n.get_mpz_t()))
        throw ConstructionError("construct_solution: n=" + n.get_str() +
                                " is not an odd positive integer");

    Int Y0 = 2 * p.g * (2 * k - 1) * V0;
    Int sum = d * n + eps;
    if (mpz_odd_p(Int(sum - Y0).get_mpz_t()))
        throw ConstructionError("construct_solution: divisor pair is not integral");
    Construction out;
    out.params = p;
    out.U0 = U0;
    out.V0 = V0;
    out.triple.n = n;
    out.triple.d1 = (sum - Y0) / 2;
    out.triple.d2 = (sum + Y0) / 2;
    out.triple.delta = delta;
    out.triple.epsilon = p.epsilon;

    const Int& d1 = out.triple.d1;
    const Int& d2 = out.triple.d2;
    Int half = (n * n + 1) / 2;
    if (d1 <= 1 || d2 <= 1)
        throw ConstructionError("construct_solution: divisors must exceed 1");
    if (d1 * d2 * p.d != p.g * half)
        throw ConstructionError("construct_solution: d1*d2*d != g*(n^2+1)/2");
    if (!mpz_divisible_p(half.get_mpz_t(), d1.get_mpz_t()) ||
        !mpz_divisible_p(half.get_mpz_t(), d2.get_mpz_t()))
        throw ConstructionError("construct_solution: divisibility check failed");

    out.case_id = classify_case(p, U0);
    Int gcd12;
    mpz_gcd(gcd12.get_mpz_t(), d1.get_mpz_t(), d2.get_mpz_t());
    out.gcd_matches_g = (gcd12 == p.g);
    return out;
}

SchinzelReport schinzel_check(long delta, const CrtClass& cls, unsigned samples) {
    if (samples < 1) throw std::invalid_argument("schinzel_check: samples must be >= 1");
    SchinzelReport rep;
    rep.s = cls.modulus;
    rep.y0 = cls.k_seed;
    const Int& s = rep.s;
    const Int& y0 = rep.y0;
    Int d(delta);
    Int g = 0;
    for (unsigned e = 1; e <= samples; ++e) {
        SchinzelSample sample;
        sample.e = e;
        Int ee(e);
        sample.values[0] = 2 * s * s * ee * ee + 2 * s * (2 * y0 - 1) * ee + 2 * y0 * y0 - 2 * y0 + 1;
        sample.values[1] = d * s * ee + d * y0 - 1;
        sample.values[2] = d * s * ee + d * y0 - d + 1;
        Int product = 1;
        for (int i = 0; i < 3; ++i) {
            product *= sample.values[i];
            Int v = abs(sample.values[i]);
            if (v >= 2) sample.factored[i] = arith::factorize(v);
        }
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), product.get_mpz_t());
        rep.samples.push_back(std::move(sample));
    }
    rep.gcd = g;
    rep.success = (g == 1);
    return rep;
}

bool jacobi_reduction_check(long delta, const Int& k) {
    long r = ((delta % 8) + 8) % 8;
    if (r != 4 && r != 6)
        throw UnsupportedDeltaError("jacobi_reduction_check: delta == " + std::to_string(r) +
                                    " (mod 8) has no derived reduction");
    MinusTwoParams p = derive_params(delta, k);
    if (!arith::is_prime(p.a) || !arith::is_prime(p.b) || !arith::is_prime(p.c))
        throw std::invalid_argument("jacobi_reduction_check: a, b, c must be prime");
    Int d(delta);
    Int A = d * d / 2 - d + 1;
    if (r == 4) {
        Int B = d / 2 - 1;
        bool first = arith::jacobi(p.a, p.c) == arith::jacobi(p.c, A);
        bool second = arith::jacobi(p.c, p.b) == (B == 1 ? 1 : arith::jacobi(p.c, B));
        return first && second;
    }
    if (r == 6) {
        Int B = (d - 2) / 4;
        bool first = arith::jacobi(p.c, p.a) == arith::jacobi(-p.c, A);
        int branch = (((delta % 16) + 16) % 16 == 14) ? +1 : -1;
        int cb = arith::jacobi(p.c, p.b);
        bool second = cb == branch * (B == 1 ? 1 : arith::jacobi(p.c, B));
        bool merged = cb == -(B == 1 ? 1 : arith::jacobi(-p.c, B));
        return first && second && merged;
    }
    throw UnsupportedDeltaError("jacobi_reduction_check: delta == " + std::to_string(r) +
                                " (mod 8) has no derived reduction");
}

}  // namespace divpair::minus_two
