#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "divpair/minus_two.hpp"
#include "divpair/oracle.hpp"

using namespace divpair;
using namespace divpair::minus_two;

namespace {

std::set<std::string> ids_with(const std::vector<CaseStatus>& table, Verdict v) {
    std::set<std::string> out;
    for (const auto& cs : table)
        if (cs.verdict == v) out.insert(cs.id());
    return out;
}

}  // namespace

TEST_CASE("derive_params: pinned parameter sets") {
    auto p = derive_params(4, 35);
    CHECK(p.g == 5);
    CHECK(p.a == 2381);
    CHECK(p.b == 139);
    CHECK(p.c == 137);
    CHECK(p.epsilon == 2);
    CHECK(pell_modulus(p) == 90682766);

    p = derive_params(14, 18);
    CHECK(p.g == 85);
    CHECK(p.a == 613);
    CHECK(p.b == 251);
    CHECK(p.c == 239);
    CHECK(p.epsilon == 12);
    CHECK(pell_modulus(p) == 73546514);

    p = derive_params(12, 1411);
    CHECK(p.g == 61);
    CHECK(p.a == 3979021);
    CHECK(p.b == 16931);
    CHECK(p.c == 16921);

    CHECK_THROWS_AS(derive_params(7, 3), std::invalid_argument);
    CHECK_THROWS_AS(derive_params(12, 0), std::invalid_argument);
}

TEST_CASE("mod8_case_table: delta == 4, k == 3") {
    auto table = mod8_case_table(4, 3);
    REQUIRE(table.size() == 16);
    CHECK(ids_with(table, Verdict::Conditional) ==
          std::set<std::string>{"3-", "4-", "5+", "6-", "7+", "8+"});
    CHECK(ids_with(table, Verdict::ImpossibleMinimality) == std::set<std::string>{"2-"});
    CHECK(ids_with(table, Verdict::Possible).empty());
    CHECK(ids_with(table, Verdict::ImpossibleMod8).size() == 9);
    // 1- passes the mod-8 solvability screen but dies on a residue-determined
    // Jacobi symbol, so it must land in the impossible bucket
    CHECK(ids_with(table, Verdict::ImpossibleMod8).count("1-") == 1);
}

TEST_CASE("mod8_case_table: delta == 6, k == 2") {
    auto table = mod8_case_table(6, 2);
    CHECK(ids_with(table, Verdict::Conditional) ==
          std::set<std::string>{"3+", "3-", "8+", "8-"});
    CHECK(ids_with(table, Verdict::ImpossibleMinimality) == std::set<std::string>{"2-"});
}

TEST_CASE("mod8_case_table: conditions carry sensible descriptions") {
    auto table = mod8_case_table(4, 3);
    for (const auto& cs : table) {
        if (cs.verdict != Verdict::Conditional) continue;
        CHECK(!cs.conditions.empty());
        for (const auto& c : cs.conditions) {
            auto s = c.describe();
            CHECK(s.front() == '(');
            CHECK(s.back() == ')');
            CHECK(s.find('/') != std::string::npos);
        }
    }
}

TEST_CASE("mod8_case_table: argument validation") {
    CHECK_THROWS_AS(mod8_case_table(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(mod8_case_table(4, 9), std::invalid_argument);
    CHECK_THROWS_AS(mod8_case_table(-2, 0), std::invalid_argument);
}

TEST_CASE("legendre_filter: pinned survivors") {
    {
        auto p = derive_params(12, 1411);
        auto out = legendre_filter(p, mod8_case_table(4, 3));
        CHECK(out == std::vector<std::string>{"4-"});
    }
    {
        auto p = derive_params(14, 18);
        auto out = legendre_filter(p, mod8_case_table(6, 2));
        CHECK(out == std::vector<std::string>{"8-"});
    }
    {
        // delta == 0 (mod 8) territory still filters fine when a, b, c are prime
        auto p = derive_params(8, 3);
        CHECK(p.a == 13);
        CHECK(p.b == 23);
        CHECK(p.c == 17);
        auto out = legendre_filter(p, mod8_case_table(0, 3));
        CHECK(out == std::vector<std::string>{"5-"});
    }
}

TEST_CASE("legendre_filter: rejects composite parameters") {
    auto p = derive_params(12, 3);  // b = 35 is composite
    CHECK_THROWS_AS(legendre_filter(p, mod8_case_table(4, 3)), std::invalid_argument);
}

TEST_CASE("check_k_conditions: delta = 12, k = 1411 satisfies everything") {
    auto rep = check_k_conditions(12, 1411);
    CHECK(rep.all_satisfied);
    for (bool c : rep.cond) CHECK(c);
    CHECK(rep.jacobi_values.at("(c/A)") == -1);
    CHECK(rep.jacobi_values.at("(c/B)") == 1);
}

TEST_CASE("check_k_conditions: delta = 14, k = 18 satisfies everything") {
    auto rep = check_k_conditions(14, 18);
    CHECK(rep.all_satisfied);
    CHECK(rep.jacobi_values.at("(-c/A)") == 1);
    CHECK(rep.jacobi_values.at("(-c/B)") == 1);
}

TEST_CASE("check_k_conditions: individual failures") {
    // wrong residue class
    auto rep = check_k_conditions(12, 4);
    CHECK_FALSE(rep.cond[0]);
    CHECK_FALSE(rep.all_satisfied);
    // right residue, composite a = 221 = 13 * 17
    rep = check_k_conditions(12, 11);
    CHECK(rep.cond[0]);
    CHECK_FALSE(rep.cond[3]);
    // delta = 14, k = 10: a, b, c all prime but (-c/A) = -1
    rep = check_k_conditions(14, 10);
    CHECK(rep.cond[0]);
    CHECK(rep.cond[3]);
    CHECK(rep.cond[4]);
    CHECK(rep.cond[5]);
    CHECK(rep.jacobi_values.at("(-c/A)") == -1);
    CHECK_FALSE(rep.all_satisfied);
    // open residue classes are refused
    CHECK_THROWS_AS(check_k_conditions(8, 3), UnsupportedDeltaError);
    CHECK_THROWS_AS(check_k_conditions(16, 3), UnsupportedDeltaError);
}

TEST_CASE("build_crt_class: delta = 12 with the x == 24 (mod 61) override") {
    auto cls = build_crt_class(12, {{24, 61}});
    CHECK(cls.k0 == 1411);
    CHECK(cls.modulus == 2440);
    CHECK(cls.k_seed == 1411);
    CHECK(cls.x_class.residue == 16921);
    CHECK(cls.x_class.modulus == 29280);
}

TEST_CASE("build_crt_class: delta = 12 default picks the smallest nonresidue") {
    auto cls = build_crt_class(12);
    CHECK(cls.modulus == 2440);
    CHECK(cls.k0 == 2131);
    CHECK(cls.x_class.residue == 25561);
    CHECK(cls.x_class.residue % 61 == 2);
}

TEST_CASE("build_crt_class: delta = 14 default and override") {
    auto cls = build_crt_class(14);
    CHECK(cls.x_class.residue == 8161);
    CHECK(cls.x_class.modulus == 28560);
    CHECK(cls.modulus == 2040);
    CHECK(cls.k0 == 1458);
    CHECK(cls.k_seed == -582);

    cls = build_crt_class(14, {{16, 85}});
    CHECK(cls.k0 == 18);
    CHECK(cls.modulus == 2040);
}

TEST_CASE("build_crt_class: delta = 4 default") {
    auto cls = build_crt_class(4);
    CHECK(cls.k0 == 35);
    CHECK(cls.modulus == 40);
}

TEST_CASE("build_crt_class: class members satisfy conditions (i)-(iii)") {
    for (long delta : {4L, 12L, 14L}) {
        auto cls = build_crt_class(delta);
        int checked = 0;
        for (Int k = cls.k0; checked < 50; k += cls.modulus) {
            if (k < 1) continue;
            auto rep = check_k_conditions(delta, k);
            CHECK(rep.cond[0]);
            CHECK(rep.cond[1]);
            CHECK(rep.cond[2]);
            ++checked;
        }
    }
}

TEST_CASE("build_crt_class: invalid override is rejected") {
    // x == 1 (mod 61) is a quadratic residue, violating (x/A) = -1
    CHECK_THROWS_AS(build_crt_class(12, {{1, 61}}), ConstructionError);
    CHECK_THROWS_AS(build_crt_class(8), UnsupportedDeltaError);
}

TEST_CASE("search_k: small pinned searches") {
    CHECK(search_k(14, 100) == std::vector<Int>{18});
    CHECK(search_k(4, 100) == std::vector<Int>{35});
    CHECK(search_k(4, 30).empty());
    CHECK_THROWS_AS(search_k(8, 100), UnsupportedDeltaError);
}

TEST_CASE("search_k: delta = 12 class reproduces the listed values") {
    auto cls = build_crt_class(12, {{24, 61}});
    std::vector<Int> expect{1411,    16051,   240531,  360091,  425971,  626051,
                            1314131, 1975371, 2241331, 2426771, 2495091};
    auto got = search_k(12, 2500000, cls, 4);
    CHECK(got == expect);
    // deterministic under different worker counts
    CHECK(search_k(12, 2500000, cls, 1) == got);
    // the next member past the window
    auto wider = search_k(12, 3000000, cls, 4);
    REQUIRE(wider.size() == 12);
    CHECK(wider.back() == 2770811);
}

TEST_CASE("search_k: members pass the full condition set") {
    for (const Int& k : search_k(14, 3000))
        CHECK(check_k_conditions(14, k).all_satisfied);
}

TEST_CASE("construct_solution: delta = 14, k = 18 end to end") {
    auto c = construct_solution(14, 18);
    CHECK(pell_modulus(c.params) == 73546514);
    CHECK(pell::digit_count(c.U0) == 692);
    CHECK(pell::leading_digits(c.U0) == "291573");
    CHECK(pell::digit_count(c.V0) == 688);
    CHECK(pell::leading_digits(c.V0) == "339990");
    CHECK(pell::digit_count(c.triple.n) == 691);
    CHECK(pell::leading_digits(c.triple.n) == "144598");
    CHECK(pell::leading_digits(c.triple.d1) == "716336");
    CHECK(pell::leading_digits(c.triple.d2) == "202366");
    // d1 + d2 = 14n + 12 with n at 691 digits pins d2 one digit above n's
    // leading 1.4; d1 is the small root
    CHECK(pell::digit_count(c.triple.d1) == 688);
    CHECK(pell::digit_count(c.triple.d2) == 692);
    CHECK(c.case_id == "8-");
    CHECK(c.gcd_matches_g);
    CHECK(oracle::verify_triple(c.triple, /*require_gt1=*/true));
    CHECK(c.triple.delta == 14);
    CHECK(c.triple.epsilon == 12);
}

TEST_CASE("construct_solution: delta = 4, k = 35 end to end") {
    auto c = construct_solution(4, 35);
    CHECK(c.case_id == "4-");
    CHECK(c.gcd_matches_g);
    CHECK(pell::digit_count(c.triple.n) == 782);
    CHECK(oracle::verify_triple(c.triple, /*require_gt1=*/true));
    // exact product identity d1 * d2 * d == g * (n^2 + 1)/2
    Int half = (c.triple.n * c.triple.n + 1) / 2;
    CHECK(c.triple.d1 * c.triple.d2 * c.params.d == c.params.g * half);
    // the realized case must survive the residue-only analysis
    auto survivors = legendre_filter(c.params, mod8_case_table(4, 35 % 8));
    CHECK(std::find(survivors.begin(), survivors.end(), c.case_id) != survivors.end());
}

TEST_CASE("construct_solution: error paths") {
    CHECK_THROWS_AS(construct_solution(8, 3), UnsupportedDeltaError);
    // forcing delta = 8, k = 3 passes derivation but fails the congruence gate
    CHECK_THROWS_AS(construct_solution(8, 3, /*force=*/true), ConstructionError);
    // k failing conditions (i)-(vi) is refused without force
    CHECK_THROWS_AS(construct_solution(14, 10), std::invalid_argument);
    // tiny digit budget aborts the Pell solve
    CHECK_THROWS_AS(construct_solution(14, 18, false, 10), BudgetError);
}

TEST_CASE("schinzel_check: delta = 12 class of Example values") {
    auto cls = build_crt_class(12, {{24, 61}});
    auto rep = schinzel_check(12, cls, 3);
    CHECK(rep.s == 2440);
    CHECK(rep.y0 == 1411);
    REQUIRE(rep.samples.size() == 3);
    const auto& s1 = rep.samples[0];
    CHECK(s1.values[1] == 46211);
    CHECK(s1.values[2] == 46201);
    REQUIRE(s1.factored[1].factors.size() == 2);
    CHECK(s1.factored[1].factors[0].first == 11);
    CHECK(s1.factored[1].factors[1].first == 4201);
    REQUIRE(s1.factored[2].factors.size() == 2);
    CHECK(s1.factored[2].factors[0].first == 47);
    CHECK(s1.factored[2].factors[1].first == 983);
    CHECK(rep.gcd == 1);
    CHECK(rep.success);
}

TEST_CASE("schinzel_check: delta = 14 default class uses the negative seed") {
    auto cls = build_crt_class(14);
    auto rep = schinzel_check(14, cls, 2);
    CHECK(rep.y0 == -582);
    CHECK(rep.samples[0].values[1] == 20411);
    CHECK(rep.samples[0].values[2] == 20399);
    CHECK(rep.success);
    CHECK_THROWS_AS(schinzel_check(14, cls, 0), std::invalid_argument);
}

TEST_CASE("schinzel polynomials evaluate to the class parameters") {
    // f1, f2, f3 at e are a, b, c of k = y0 + s*e; spot-check against derive_params
    auto cls = build_crt_class(12, {{24, 61}});
    auto rep = schinzel_check(12, cls, 2);
    for (const auto& s : rep.samples) {
        Int k = cls.k_seed + cls.modulus * s.e;
        auto p = derive_params(12, k);
        CHECK(s.values[0] == p.a);
        CHECK(s.values[1] == p.b);
        CHECK(s.values[2] == p.c);
    }
}

TEST_CASE("jacobi_reduction_check: pinned instances") {
    CHECK(jacobi_reduction_check(12, 1411));
    CHECK(jacobi_reduction_check(14, 18));
    CHECK(jacobi_reduction_check(14, 10));
    CHECK(jacobi_reduction_check(4, 35));
    // delta = 22 exercises the other delta mod 16 branch (22 == 6 mod 16)
    for (Int k = 2; k < 200; k += 8) {
        auto p = derive_params(22, k);
        if (arith::is_prime(p.a) && arith::is_prime(p.b) && arith::is_prime(p.c))
            CHECK(jacobi_reduction_check(22, k));
    }
    CHECK_THROWS_AS(jacobi_reduction_check(16, 3), UnsupportedDeltaError);
    CHECK_THROWS_AS(jacobi_reduction_check(12, 3), std::invalid_argument);  // composite b
}
