// Codeword multiplicity formulas: seeds, orbit-size exponents, and totals.
//
// Every count is a sum of exact powers of two, one per seed, so totals stay
// symbolic and work at any m. The collision exponents alpha are obtained by
// explicit Minkowski sums (never from an assumed formula); they depend only
// on the participating indices, so they are evaluated in the smallest ambient
// dimension that contains them and memoized. Where that dimension exceeds the
// explicit-group cap the report is flagged incomplete instead of guessing.

#pragma once

#include <optional>
#include <vector>

#include "mono/code_model.hpp"
#include "mono/dyadic.hpp"
#include "mono/lta.hpp"
#include "mono/monomial.hpp"

namespace mono {

struct SeedDescriptor {
    enum class Kind { kDisjointTuple, kNestedDegreeDrop };
    Kind kind = Kind::kDisjointTuple;
    Monomial h;               // constant 1 for plain tuples
    std::vector<Monomial> S;  // degree-r members (tuples) or the f_i = h*q_i (seeds)
    std::optional<int> j;     // linear-term variable for nested seeds
    int exponent = 0;         // orbit size = 2^exponent
};

struct OracleComparison {
    BigInt oracle_count = 0;  // exhaustive number of codewords at this weight
    bool equal = false;
    bool exceeds = false;     // total_count > oracle_count: a genuine failure
};

struct EnumerationReport {
    BigInt weight = 0;
    BigInt total_count = 0;
    std::vector<SeedDescriptor> seeds;
    bool incomplete = false;  // some collision exponent was out of explicit reach
    std::optional<OracleComparison> verified;
};

// All unordered pairwise-disjoint k-subsets of the degree-r members.
std::vector<std::vector<Monomial>> enumerate_disjoint_tuples(const DecreasingSet& I, int r, int k);

struct DisjointCountOptions {
    bool collision_corrected = true;  // subtract pairwise Minkowski exponents
    bool ordered = false;             // count ordered tuples: multiplies the total by k!
};

// Count of weight-w_{k,r} codewords that are sums of k disjoint degree-r
// members. Per tuple the exponent is kr + sum |lambda_{f_i}|, minus the
// pairwise collision exponents unless collision_corrected is off (the
// uncorrected sum overcounts whenever orbits collide; both forms are exposed
// so the discrepancy itself is observable). k = 1 with r = max degree is the
// minimum-weight enumerator.
EnumerationReport count_disjoint_k_sum(const DecreasingSet& I, int r, int k,
                                       const DisjointCountOptions& opt = {});

// Seeds (h; S; x_j): h a degree-(r-2) member, S a set of ell >= 0 degree-r
// members with h dividing each and pairwise gcd exactly h (so the quotients
// q_i are disjoint quadratics), x_j outside ind(h) and every q_i, h*x_j a
// member. For ell = 0 the seed is canonicalized to j > max index of h, making
// seeds correspond one-to-one with degree-(r-1) members. Exponent:
//   (r-2) + |lambda_h| + 2*ell + sum |lambda_{f_i}(q_i)| - sum alpha(q_a,q_b)
//   + 1 + (ell = 0 ? |lambda_h(x_j)| : |lambda_{f_1...f_ell}(x_j)|).
// Every codeword counted has weight 2^{m-r+1}.
EnumerationReport count_nested_degree_drop(const DecreasingSet& I, int r);

// Attaches the exhaustive count at the report's weight; caps apply.
void attach_oracle_comparison(EnumerationReport& report, const DecreasingSet& I);

// The two-part orbit-size decomposition for P = h * Q, checked explicitly:
//   |G_h orbit of P|   = 2^{beta - alpha}
//   |full orbit of P|  = 2^{deg h + |lambda_h| + beta - alpha}
// with beta from the joint tail stabilizer and alpha from pairwise Minkowski
// sums. The explicit orbit sizes are returned alongside so callers assert the
// identities rather than trust them. The identities are claimed only for the
// canonical split (h = gcd of the terms of P, as factor_head_kernel produces)
// and only while every pairwise Minkowski sum is a power of two; other inputs
// are accepted so the failure modes stay observable. Splits that leave head
// variables in the kernel, and kernels with overlapping tails, do fail: the
// triangle kernel's Minkowski sums are not powers of two even though its
// orbit is, so alpha_all_power_of_two gates any use of alpha.
struct MasterOrbit {
    int head_exponent = 0;  // deg h + |lambda_h|
    int beta = 0;
    int beta_mix = 0;
    int alpha = 0;
    bool alpha_all_power_of_two = true;
    std::vector<CollisionReport> pairs;
    BigInt stabilizer_orbit = 0;
    BigInt full_orbit = 0;

    int predicted_stabilizer_exponent() const { return beta - alpha; }
    int predicted_full_exponent() const { return head_exponent + beta - alpha; }
};

MasterOrbit master_orbit_size(Monomial h, const Poly& q, int m);

}  // namespace mono
