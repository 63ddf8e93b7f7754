// Exact codeword weights from algebraic structure.
//
// For P = h * (f_1 + ... + f_q) with the head h variable-disjoint from the
// residual tails f_i, the weight is d * Sigma(F) where d = 2^{m-r},
// r = deg(h) + a_max, and Sigma(F) is the signed dyadic subset sum
//   Sigma(F) = sum_{S nonempty} (-2)^{|S|-1} * 2^{a_max - u_S},
// u_S the degree of lcm{f_i : i in S}. Scaling by 2^{U - a_max} (U = max u_S)
// clears every denominator at once, which is how dyadic_decompose certifies
// integrality before reducing to canonical digits.

#pragma once

#include <map>
#include <optional>
#include <vector>

#include "mono/dyadic.hpp"
#include "mono/eval.hpp"
#include "mono/monomial.hpp"

namespace mono {

inline constexpr int kMaxTails = 20;  // subset enumeration cap: 2^20 subsets

struct ResidualFamily {
    Monomial head;
    std::vector<Monomial> tails;  // distinct, each disjoint from head
    int m = 1;
    int a_max = 0;             // max tail degree
    int r = 0;                 // deg(head) + a_max
    int max_union_degree = 0;  // U

    static ResidualFamily make(Monomial head, std::vector<Monomial> tails, int m);
    Poly to_poly() const;  // h * (f_1 + ... + f_q), requires m <= kMaxVars
};

// Splits an arbitrary nonzero polynomial as h * Q with h = gcd of all terms
// (equivalently: gcd of the maximal-degree terms shrunk to divide the rest),
// tails = terms of Q.
ResidualFamily residual_family_of(const Poly& p);

int union_degree(const ResidualFamily& fam, std::uint32_t subset);  // subset bit i picks tails[i]

struct SigmaResult {
    Dyadic sigma;
    // Terms grouped by denominator exponent: Sigma = sum_l c_l / 2^l.
    // The oddness of the nonzero c_l is a monitored observation, not an invariant;
    // even_coefficients() surfaces violations for logging.
    std::map<int, long long> c;
    std::vector<int> even_coefficients() const;
};

SigmaResult sigma(const ResidualFamily& fam);
BigInt general_weight(const ResidualFamily& fam);  // d * Sigma, certified integral

// Inclusion-exclusion weight of a sum of rows:
//   wt(xor of rows in J) = sum_{S nonempty} (-2)^{|S|-1} |and of supports|.
BigInt pie_weight(const std::vector<EvalVector>& rows, const std::vector<int>& J);

// Canonical dyadic form of a normalized weight: Sigma = N / 2^k with N odd
// (or k = 0), digits = positions of the set bits of N.
struct DyadicWeight {
    BigInt N;
    int k = 0;
    std::vector<int> digits;  // ascending j with bit j of N set

    Dyadic reconstruct() const;
};

// With a family, the pre-reduction exponent U - a_max is used to certify that
// 2^{U-a_max} * Sigma is an integer before reducing.
DyadicWeight dyadic_decompose(const Dyadic& sig, const ResidualFamily& fam);
DyadicWeight dyadic_decompose(const Dyadic& sig);

}  // namespace mono
