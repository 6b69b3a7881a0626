#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "divpair/plus_two.hpp"

namespace divpair::minus_two {

// Derived quantities of the epsilon = delta - 2 family.
struct MinusTwoParams {
    long delta = 0;
    Int k;
    Int g;  // (delta^2 - 2*delta + 2)/2
    Int d;  // 2k^2 - 2k + 1
    Int a;  // = d
    Int b;  // delta*k - 1
    Int c;  // delta*k - delta + 1
    long epsilon = 0;  // delta - 2
};

enum class PrimeRole { A, B, C };

// Quadratic-residue requirement: jacobi(sign * 2^pow2 * prod(numerator), <modulus>)
// must not be -1 for the factorization case to be realizable.
struct JacobiCondition {
    int sign = 1;      // +1 or -1
    int pow2 = 0;      // exponent of 2 in the numerator
    std::vector<PrimeRole> numerator;  // which of a, b, c appear
    PrimeRole modulus = PrimeRole::A;
    int required = 1;  // value that keeps the case alive

    std::string describe() const;  // e.g. "(-2ac/b)"
};

enum class Verdict { ImpossibleMod8, ImpossibleMinimality, Conditional, Possible };

// One of the sixteen factorizations 1+- .. 8+-.
struct CaseStatus {
    int index = 1;  // 1..8
    int sign = 1;   // +1 / -1
    Verdict verdict = Verdict::Conditional;
    std::vector<JacobiCondition> conditions;

    std::string id() const;  // "4-", "7+"
};

struct KConditionReport {
    Int k;
    std::array<bool, 6> cond{};  // (i)..(vi)
    std::map<std::string, int> jacobi_values;
    bool all_satisfied = false;
};

// Arithmetic progression k == k0 (mod modulus) whose members satisfy
// conditions (i)-(iii).
struct CrtClass {
    Int k0;       // canonical, 0 <= k0 < modulus
    Int modulus;
    Int k_seed;   // representative derived from the canonical x solution; may be negative
    arith::Congruence x_class;                 // combined congruence on x
    std::vector<arith::Congruence> x_system;   // the underlying system
};

// End-to-end construction output with diagnostics.
struct Construction {
    DivisorTriple triple;
    MinusTwoParams params;
    Int U0;
    Int V0;
    std::string case_id;       // factorization realized by U0's residues mod a, b, c
    bool gcd_matches_g = false;  // gcd(d1, d2) == g, checked empirically
};

struct SchinzelSample {
    Int e;
    std::array<Int, 3> values;               // f1(e), f2(e), f3(e)
    std::array<arith::FactorMultiset, 3> factored;
};

struct SchinzelReport {
    Int s;       // class modulus
    Int y0;      // class seed
    std::vector<SchinzelSample> samples;
    Int gcd;     // running gcd of the products
    bool success = false;  // gcd == 1
};

MinusTwoParams derive_params(long delta, const Int& k);

// D = 2abc.
Int pell_modulus(const MinusTwoParams& params);

// Case analysis from residues alone: mod-8 solvability of each induced
// congruence over (s, t), the minimality contradiction for 2-, and the
// residue-determined part of each Jacobi condition.
std::vector<CaseStatus> mod8_case_table(int delta_mod8, int k_mod8);

// Evaluate the conditional cases' Jacobi conditions with actual a, b, c
// (all required prime). Returns the ids of the cases not excluded.
std::vector<std::string> legendre_filter(const MinusTwoParams& params,
                                         const std::vector<CaseStatus>& table);

// Conditions (i)-(vi) for delta == 4 or 6 (mod 8).
// Throws UnsupportedDeltaError for delta == 0, 2 (mod 8).
KConditionReport check_k_conditions(long delta, const Int& k);

// Build the CRT class guaranteeing (i)-(iii). Overrides replace the default
// residue choices for any prime of A they cover (override moduli may be
// composite, e.g. x == 16 (mod 85)).
CrtClass build_crt_class(long delta, const std::vector<arith::Congruence>& overrides = {});

// Ascending k <= k_max passing all six conditions, optionally restricted to
// a class. Deterministic regardless of worker count.
std::vector<Int> search_k(long delta, const Int& k_max,
                          const std::optional<CrtClass>& cls = std::nullopt,
                          unsigned workers = 1);

// Full pipeline: Pell solve D = 2abc, congruence gate, n, d1, d2 and every
// exact postcondition. force admits delta == 0, 2 (mod 8) for exploration.
Construction construct_solution(long delta, const Int& k, bool force = false,
                                std::size_t digit_budget = pell::kDefaultDigitBudget);

// Finite fixed-divisor check: gcd of f1(e)f2(e)f3(e) over e = 1..samples.
SchinzelReport schinzel_check(long delta, const CrtClass& cls, unsigned samples);

// Numeric verification of the paper's reciprocity reductions
// ((a/c) = (c/A), (c/b) = (c/B) and the delta mod 16 branches).
bool jacobi_reduction_check(long delta, const Int& k);

}  // namespace divpair::minus_two
