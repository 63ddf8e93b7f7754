// Decreasing monomial codes: the partial order on monomials, downward-closed
// monomial sets, Reed-Muller instances, generator matrices over the point
// ordering of eval.hpp, and membership tests.
//
// f <= g in the decreasing order iff deg(f) <= deg(g) and, pairing the
// largest index of f with the largest of g and walking down, every f-index
// is <= its partner. A set closed downward under this order spans a code
// whose minimum distance is 2^{m - max degree}.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mono/dyadic.hpp"
#include "mono/eval.hpp"
#include "mono/monomial.hpp"

namespace mono {

bool leq_decreasing(Monomial f, Monomial g);

struct DecreasingSet {
    int m = 1;
    std::vector<std::uint64_t> members;  // sorted unique masks, downward closed

    std::size_t dimension() const { return members.size(); }
    bool contains(Monomial f) const;
};

// Closedness check: the one-step moves (drop one variable; move one variable
// to any lower free slot) generate the full down-set, so a set is decreasing
// iff it is closed under them.
bool is_decreasing(int m, const std::vector<Monomial>& set);

DecreasingSet decreasing_closure(int m, const std::vector<Monomial>& gens);

// Validating constructor: rejects sets that are not downward closed.
DecreasingSet make_decreasing_set(int m, const std::vector<Monomial>& members);

DecreasingSet reed_muller(int r, int m);  // all monomials of degree <= r

int r_plus(const DecreasingSet& I);           // max member degree; -1 when empty
BigInt min_distance(const DecreasingSet& I);  // 2^{m - r_plus}; empty set rejected
bool contains_poly(const DecreasingSet& I, const Poly& p);
std::vector<Monomial> members_of_degree(const DecreasingSet& I, int deg);

// Members in (degree, mask) order: the row order of the generator matrix and
// the message-bit order used by the exhaustive oracle.
std::vector<std::uint64_t> ordered_members(const DecreasingSet& I);

// Rows in (degree, mask) order, one evaluation vector per member; m capped by
// kMaxEvalVars. Hex rows: nibble i holds points 4i..4i+3, point 4i in bit 0.
std::vector<EvalVector> generator_matrix(const DecreasingSet& I);
std::string row_to_hex(const EvalVector& v);
std::vector<std::string> generator_matrix_hex(const DecreasingSet& I);
int gf2_rank(std::vector<EvalVector> rows);

}  // namespace mono
