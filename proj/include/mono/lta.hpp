// The lower-triangular affine group LTA(m,2) acting on the quotient ring.
//
// An element is x_i -> x_i + sum_{j<i} b_ij x_j + eps_i with unit diagonal;
// the group has m(m-1)/2 + m free bits, so explicit enumeration is feasible
// through m = 6 (2^21 elements). Orbits are computed as hash sets of
// canonical term lists; the parallel path partitions the parameter space
// over threads and merges, the serial path is the reference kept for tests.
//
// Orbit sizes obey log2 |orbit(f)| = deg(f) + |lambda_f| for monomials; the
// partition weights and their head-constrained variants below are the
// combinatorial side of that law.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mono/dyadic.hpp"
#include "mono/monomial.hpp"

namespace mono {

inline constexpr int kMaxExplicitGroupVars = 6;

struct LtaElement {
    int m = 1;
    std::vector<std::uint64_t> row;  // row[i] has bits j < i only (the b_ij)
    std::uint64_t eps = 0;

    friend bool operator==(const LtaElement& a, const LtaElement& b) {
        return a.m == b.m && a.row == b.row && a.eps == b.eps;
    }
};

int lta_param_bits(int m);  // m(m-1)/2 + m = log2 |LTA(m,2)|
LtaElement lta_element_from_code(int m, std::uint32_t code);
std::uint32_t lta_code_from_element(const LtaElement& g);
LtaElement lta_identity(int m);
LtaElement lta_compose(const LtaElement& g, const LtaElement& h);  // g after h: x -> g(h(x))

Poly apply(const LtaElement& g, const Poly& p);
Poly apply(const LtaElement& g, Monomial f, int m);

int partition_weight(Monomial f);                                   // |lambda_f|
int constrained_partition_weight(Monomial occupied, Monomial g);    // |lambda_F(g)|, any overlap
int orbit_size_log2_formula(Monomial f);                            // deg f + |lambda_f|

using PolyKey = std::vector<std::uint64_t>;

struct OrbitSummary {
    BigInt size = 0;
    std::vector<PolyKey> elements;  // sorted canonical term lists; empty when not retained
};

struct OrbitOptions {
    bool keep_elements = true;
    bool parallel = true;
    std::optional<Monomial> fix_head;  // enumerate only the stabilizer of this monomial
};

OrbitSummary orbit(const Poly& seed, const OrbitOptions& opt = {});
OrbitSummary orbit_serial(const Poly& seed, const OrbitOptions& opt = {});  // reference path

std::vector<std::uint32_t> head_stabilizer(Monomial h, int m);

// alpha for a tail pair: Minkowski sum of the two G_h-orbits,
// |O_i + O_j| = |O_i| |O_j| / 2^alpha. A non-power-of-two quotient is
// reported, not asserted away.
struct CollisionReport {
    int alpha = -1;
    bool power_of_two = false;
    std::uint64_t orbit_i = 0;
    std::uint64_t orbit_j = 0;
    std::uint64_t minkowski = 0;
};
CollisionReport collision_exponent(Monomial u_i, Monomial u_j, Monomial h, int m);

// beta by explicit parameter enumeration: log2 of the index in G_h of the
// joint stabilizer of the attached tails {gamma : gamma(h u_j) = h u_j for all j}.
// beta_mix is the residual against the raw single-tail exponents.
struct KernelFreedom {
    int beta = 0;
    int beta_mix = 0;
    std::uint64_t g_h_size = 0;
    std::uint64_t joint_stabilizer = 0;
};
KernelFreedom kernel_freedom(Monomial h, const std::vector<Monomial>& tails, int m);

}  // namespace mono
