#include "divpair/plus_two.hpp"

namespace divpair::plus_two {

Int n_from_u(long delta, const Int& U) {
    if (delta % 2 != 0 || delta < 2)
        throw std::invalid_argument("n_from_u: delta must be even and >= 2");
    Int d(delta);
    Int num = 2 * (d + 1) * U - d * (d + 2);
    Int den = d * d - 2;
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw std::invalid_argument("n_from_u: U=" + U.get_str() +
                                    " is not a sequence member (non-integral n)");
    Int n = num / den;
    if (n <= 0)
        throw std::invalid_argument("n_from_u: U=" + U.get_str() +
                                    " gives n=" + n.get_str() + "; m >= 1 required");
    return n;
}

DivisorTriple triple_at(long delta, unsigned long m, std::size_t digit_budget) {
    if (m < 1) throw std::invalid_argument("triple_at: m must be >= 1");
    Int d(delta);
    Int U = pell::u_sequence(delta, m);
    if (pell::digit_count(U) > digit_budget)
        throw BudgetError("triple_at: digit budget exceeded at m=" + std::to_string(m));
    Int n = n_from_u(delta, U);
    Int disc = 4 * (d * n + d + 2) * (d * n + d + 2) - 8 * (n * n + 1);
    auto root = arith::integer_sqrt(disc);
    if (!root.exact)
        throw ConstructionError("triple_at: discriminant not a perfect square (bug trap)");
    DivisorTriple t;
    t.n = n;
    t.d1 = (2 * d * n + 2 * d + 4 - root.root) / 4;
    t.d2 = (2 * d * n + 2 * d + 4 + root.root) / 4;
    t.delta = delta;
    t.epsilon = delta + 2;
    Int half = (n * n + 1) / 2;
    if (t.d1 * t.d2 != half || !mpz_divisible_p(half.get_mpz_t(), t.d1.get_mpz_t()) ||
        !mpz_divisible_p(half.get_mpz_t(), t.d2.get_mpz_t()))
        throw ConstructionError("triple_at: divisor postcondition failed (bug trap)");
    return t;
}

std::vector<DivisorTriple> triple_chain(long delta, unsigned long count,
                                        std::size_t digit_budget) {
    if (count < 1) throw std::invalid_argument("triple_chain: count must be >= 1");
    std::vector<DivisorTriple> out;
    out.reserve(count);
    for (unsigned long m = 1; m <= count; ++m)
        out.push_back(triple_at(delta, m, digit_budget));
    return out;
}

MonicLikeQuadratic quadratic_for(long delta, const Int& n) {
    Int d(delta);
    return MonicLikeQuadratic{2, -2 * (d * n + d + 2), n * n + 1};
}

Int resultant_2x2(const MonicLikeQuadratic& f, const MonicLikeQuadratic& g) {
    if (f.c2 == 0 || g.c2 == 0)
        throw std::invalid_argument("resultant_2x2: leading coefficients must be nonzero");
    // Sylvester matrix of two quadratics:
    //   | a0  0  b0  0 |
    //   | a1 a0  b1 b0 |
    //   | a2 a1  b2 b1 |
    //   |  0 a2   0 b2 |
    const Int m[4][4] = {{f.c2, 0, g.c2, 0},
                         {f.c1, f.c2, g.c1, g.c2},
                         {f.c0, f.c1, g.c0, g.c1},
                         {0, f.c0, 0, g.c0}};
    auto det3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) -> Int {
        return m[r0][c0] * (m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]) -
               m[r0][c1] * (m[r1][c0] * m[r2][c2] - m[r1][c2] * m[r2][c0]) +
               m[r0][c2] * (m[r1][c0] * m[r2][c1] - m[r1][c1] * m[r2][c0]);
    };
    return m[0][0] * det3(1, 2, 3, 1, 2, 3) - m[0][1] * det3(1, 2, 3, 0, 2, 3) +
           m[0][2] * det3(1, 2, 3, 0, 1, 3) - m[0][3] * det3(1, 2, 3, 0, 1, 2);
}

bool resultant_identity_check(long delta, unsigned long m) {
    if (m < 1) throw std::invalid_argument("resultant_identity_check: m must be >= 1");
    Int d(delta);
    Int u_prev = pell::u_sequence(delta, m - 1);
    Int u_cur = pell::u_sequence(delta, m);
    Int d2 = d * d;
    Int lhs = d2 * d2 - 2 * d2 * (u_cur * u_prev + 1) + (u_cur + u_prev) * (u_cur + u_prev);
    return lhs == 0;
}

}  // namespace divpair::plus_two
