#include "divpair/pell.hpp"

#include <sstream>

namespace divpair::pell {

PellSolution::PellSolution(Int D_, Int U_, Int V_)
    : D(std::move(D_)), U(std::move(U_)), V(std::move(V_)) {
    if (U * U - D * V * V != 1)
        throw std::invalid_argument("PellSolution: U^2 - D*V^2 != 1 for D=" + D.get_str());
}

std::size_t PellSolution::u_digits() const { return digit_count(U); }
std::size_t PellSolution::v_digits() const { return digit_count(V); }

std::size_t digit_count(const Int& v) {
    if (v == 0) return 1;
    Int a = abs(v);
    // sizeinbase may overshoot by one
    std::size_t est = mpz_sizeinbase(a.get_mpz_t(), 10);
    if (est == 1) return 1;
    Int pow;
    mpz_ui_pow_ui(pow.get_mpz_t(), 10, est - 1);
    return a >= pow ? est : est - 1;
}

std::string leading_digits(const Int& v, std::size_t lead) {
    Int a = abs(v);
    std::string s = a.get_str();
    return s.substr(0, lead);
}

namespace {

void require_nonsquare(const Int& D) {
    if (D < 2) throw std::invalid_argument("cf_sqrt: D must be >= 2");
    auto r = arith::integer_sqrt(D);
    if (r.exact)
        throw std::invalid_argument("cf_sqrt: D=" + D.get_str() + " is a perfect square (" +
                                    r.root.get_str() + "^2)");
}

}  // namespace

CFExpansion cf_sqrt(const Int& D) {
    require_nonsquare(D);
    CFExpansion out;
    out.D = D;
    out.a0 = arith::integer_sqrt(D).root;
    // PQa recurrence; the period ends when Q returns to 1.
    Int P = 0, Q = 1, a = out.a0;
    while (true) {
        P = a * Q - P;
        Q = (D - P * P) / Q;
        a = (P + out.a0) / Q;
        out.period.push_back(a);
        if (Q == 1) break;
    }
    return out;
}

namespace {

// 2x2 matrix product of [[a_i, 1], [1, 0]] over terms[lo, hi), by divide and
// conquer so the big multiplications happen at full operand size (quasi-linear
// overall, where the naive running product is quadratic).
struct Mat {
    Int m00, m01, m10, m11;
};

Mat term_product(const std::vector<unsigned long>& terms, std::size_t lo, std::size_t hi) {
    if (hi - lo <= 32) {
        Mat m{1, 0, 0, 1};
        for (std::size_t i = lo; i < hi; ++i) {
            // right-multiply by [[t, 1], [1, 0]]
            Int c0 = m.m00 * terms[i] + m.m01;
            Int c1 = m.m10 * terms[i] + m.m11;
            m.m01 = std::move(m.m00);
            m.m11 = std::move(m.m10);
            m.m00 = std::move(c0);
            m.m10 = std::move(c1);
        }
        return m;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    Mat a = term_product(terms, lo, mid);
    Mat b = term_product(terms, mid, hi);
    Mat out;
    out.m00 = a.m00 * b.m00 + a.m01 * b.m10;
    out.m01 = a.m00 * b.m01 + a.m01 * b.m11;
    out.m10 = a.m10 * b.m00 + a.m11 * b.m10;
    out.m11 = a.m10 * b.m01 + a.m11 * b.m11;
    return out;
}

}  // namespace

PellSolution pell_fundamental(const Int& D, std::size_t digit_budget) {
    require_nonsquare(D);
    const Int a0 = arith::integer_sqrt(D).root;

    // The partial quotients are bounded by 2*a0, so whenever they fit machine
    // words the whole period can be collected with cheap small-number
    // arithmetic and the convergent assembled by divide and conquer.
    if (mpz_fits_ulong_p(Int(2 * a0 + 1).get_mpz_t())) {
        std::vector<unsigned long> terms{mpz_get_ui(a0.get_mpz_t())};
        Int P = 0, Q = 1, a = a0;
        double bits = 0;  // running size estimate of the convergent numerator
        do {
            P = a * Q - P;
            Q = (D - P * P) / Q;
            a = (P + a0) / Q;
            unsigned long t = mpz_get_ui(a.get_mpz_t());
            terms.push_back(t);
            bits += mpz_sizeinbase(a.get_mpz_t(), 2);
            if (bits / 3.3219 > static_cast<double>(digit_budget) + 64)
                throw BudgetError("pell_fundamental: digit budget exceeded for D=" +
                                  D.get_str());
        } while (Q != 1);
        std::size_t period = terms.size() - 1;
        // convergent just before the period's end: terms a_0 .. a_{L-1}
        Mat m = term_product(terms, 0, period);
        Int p = std::move(m.m00), q = std::move(m.m10);
        if (period % 2 == 1) {
            // p^2 - D q^2 = -1; compose with itself to reach +1
            Int u = p * p + D * q * q;
            Int v = 2 * p * q;
            p = std::move(u);
            q = std::move(v);
        }
        if (digit_count(p) > digit_budget)
            throw BudgetError("pell_fundamental: digit budget exceeded for D=" + D.get_str());
        return PellSolution(D, p, q);
    }

    // General path: iterate convergents directly.
    Int P = 0, Q = 1, a = a0;
    Int p_prev = 1, p_cur = a0;  // convergent numerators
    Int q_prev = 0, q_cur = 1;   // denominators
    unsigned long iter = 0;
    while (p_cur * p_cur - D * q_cur * q_cur != 1) {
        P = a * Q - P;
        Q = (D - P * P) / Q;
        a = (P + a0) / Q;
        Int p_next = a * p_cur + p_prev;
        Int q_next = a * q_cur + q_prev;
        p_prev = std::move(p_cur);
        p_cur = std::move(p_next);
        q_prev = std::move(q_cur);
        q_cur = std::move(q_next);
        if ((++iter & 63) == 0 && mpz_sizeinbase(p_cur.get_mpz_t(), 10) > digit_budget)
            throw BudgetError("pell_fundamental: digit budget exceeded for D=" + D.get_str());
    }
    return PellSolution(D, p_cur, q_cur);
}

PellSolution pell_iterate(const PellSolution& fund, unsigned long m) {
    Int U = 1, V = 0;          // identity of the composition law
    Int bu = fund.U, bv = fund.V;
    const Int& D = fund.D;
    while (m > 0) {
        if (m & 1) {
            Int nu = U * bu + D * V * bv;
            Int nv = U * bv + V * bu;
            U = std::move(nu);
            V = std::move(nv);
        }
        m >>= 1;
        if (m > 0) {
            Int nu = bu * bu + D * bv * bv;
            Int nv = 2 * bu * bv;
            bu = std::move(nu);
            bv = std::move(nv);
        }
    }
    return PellSolution(D, U, V);
}

Int u_sequence(long delta, unsigned long m) {
    if (delta % 2 != 0) throw std::invalid_argument("u_sequence: delta must be even");
    if (delta < 2) throw std::invalid_argument("u_sequence: delta must be >= 2");
    Int d(delta);
    PellSolution fund(d * d - 2, d * d - 1, d);
    return pell_iterate(fund, m).U;
}

}  // namespace divpair::pell
