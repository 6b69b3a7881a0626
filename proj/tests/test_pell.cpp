#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "divpair/pell.hpp"

using namespace divpair;
using namespace divpair::pell;

TEST_CASE("digit_count and leading_digits") {
    CHECK(digit_count(0) == 1);
    CHECK(digit_count(9) == 1);
    CHECK(digit_count(10) == 2);
    CHECK(digit_count(-999) == 3);
    Int big;
    mpz_ui_pow_ui(big.get_mpz_t(), 10, 100);
    CHECK(digit_count(big) == 101);
    CHECK(digit_count(big - 1) == 100);
    CHECK(leading_digits(Int("291573123456789")) == "291573");
    CHECK(leading_digits(-42) == "42");
}

TEST_CASE("cf_sqrt: pinned expansions") {
    auto e = cf_sqrt(14);
    CHECK(e.a0 == 3);
    CHECK(e.period == std::vector<Int>{1, 2, 1, 6});
    e = cf_sqrt(2);
    CHECK(e.a0 == 1);
    CHECK(e.period == std::vector<Int>{2});
    e = cf_sqrt(62);  // delta = 8: [7; 1, 6, 1, 14]
    CHECK(e.a0 == 7);
    CHECK(e.period == std::vector<Int>{1, 6, 1, 14});
}

TEST_CASE("cf_sqrt: period structure for all non-squares to 500") {
    for (long D = 2; D <= 500; ++D) {
        auto r = arith::integer_sqrt(D);
        if (r.exact) {
            CHECK_THROWS_AS(cf_sqrt(D), std::invalid_argument);
            continue;
        }
        auto e = cf_sqrt(D);
        CHECK(e.period.back() == 2 * e.a0);
        // the body before the final term is a palindrome
        std::size_t len = e.period.size() - 1;
        for (std::size_t i = 0; i < len / 2; ++i)
            CHECK(e.period[i] == e.period[len - 1 - i]);
    }
}

TEST_CASE("cf_sqrt: delta family law for even delta in [4, 200]") {
    for (long delta = 4; delta <= 200; delta += 2) {
        Int D = Int(delta) * delta - 2;
        auto e = cf_sqrt(D);
        CHECK(e.a0 == delta - 1);
        CHECK(e.period == std::vector<Int>{1, delta - 2, 1, 2 * delta - 2});
    }
}

TEST_CASE("pell_fundamental: pinned solutions") {
    auto s = pell_fundamental(2);
    CHECK(s.U == 3);
    CHECK(s.V == 2);
    s = pell_fundamental(62);
    CHECK(s.U == 63);
    CHECK(s.V == 8);
    s = pell_fundamental(661);  // a classically large fundamental solution
    CHECK(s.U == Int("16421658242965910275055840472270471049"));
    CHECK(s.V == Int("638728478116949861246791167518480580"));
}

TEST_CASE("pell_fundamental: the delta = 14, k = 18 modulus") {
    auto s = pell_fundamental(73546514);
    CHECK(s.u_digits() == 692);
    CHECK(leading_digits(s.U) == "291573");
    CHECK(s.v_digits() == 688);
    CHECK(leading_digits(s.V) == "339990");
    CHECK(s.U * s.U - s.D * s.V * s.V == 1);
}

TEST_CASE("pell_fundamental: family closed form") {
    for (long delta = 4; delta <= 200; delta += 2) {
        Int D = Int(delta) * delta - 2;
        auto s = pell_fundamental(D);
        CHECK(s.U == D + 1);
        CHECK(s.V == delta);
    }
}

TEST_CASE("pell_fundamental: error paths") {
    CHECK_THROWS_AS(pell_fundamental(25), std::invalid_argument);
    CHECK_THROWS_AS(pell_fundamental(1), std::invalid_argument);
    CHECK_THROWS_AS(pell_fundamental(73546514, 100), BudgetError);
}

TEST_CASE("PellSolution constructor validates") {
    CHECK_THROWS_AS(PellSolution(2, 3, 3), std::invalid_argument);
    PellSolution ok(2, 3, 2);
    CHECK(ok.u_digits() == 1);
}

TEST_CASE("pell_iterate: pinned delta = 8 chain") {
    PellSolution fund(62, 63, 8);
    auto m0 = pell_iterate(fund, 0);
    CHECK(m0.U == 1);
    CHECK(m0.V == 0);
    auto m2 = pell_iterate(fund, 2);
    CHECK(m2.U == 7937);
    CHECK(m2.V == 1008);
    auto m3 = pell_iterate(fund, 3);
    CHECK(m3.U == 999999);
}

TEST_CASE("pell_iterate: matches repeated composition") {
    for (long D : {2L, 3L, 14L, 62L, 142L}) {
        auto fund = pell_fundamental(D);
        Int u = 1, v = 0;
        for (unsigned long m = 0; m <= 12; ++m) {
            auto s = pell_iterate(fund, m);
            CHECK(s.U == u);
            CHECK(s.V == v);
            Int nu = u * fund.U + D * v * fund.V;
            Int nv = u * fund.V + v * fund.U;
            u = nu;
            v = nv;
        }
    }
}

TEST_CASE("u_sequence: pinned values and recurrence") {
    CHECK(u_sequence(8, 0) == 1);
    CHECK(u_sequence(8, 1) == 63);
    CHECK(u_sequence(8, 2) == 7937);
    CHECK_THROWS_AS(u_sequence(7, 1), std::invalid_argument);
    CHECK_THROWS_AS(u_sequence(0, 1), std::invalid_argument);
    for (long delta = 2; delta <= 20; delta += 2) {
        Int mod = Int(delta) * delta - 2;
        Int prev = u_sequence(delta, 0);
        Int cur = u_sequence(delta, 1);
        for (unsigned long m = 2; m <= 50; ++m) {
            Int next = u_sequence(delta, m);
            CHECK(next == 2 * (mod + 1) * cur - prev);
            CHECK(next % mod == 1);             // U_m == 1 (mod delta^2 - 2)
            CHECK(mpz_odd_p(next.get_mpz_t()));
            prev = cur;
            cur = next;
        }
    }
}
