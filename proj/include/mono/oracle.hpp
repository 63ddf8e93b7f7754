// Ground truth by brute force: every formula in the library is checked, at
// desk scale, against exhaustive enumeration of the code.
//
// The message space is walked in Gray-code order, so each codeword costs one
// row XOR and one popcount. The parallel path splits the walk into contiguous
// segments (each seeded by decoding its first Gray word directly) and merges
// per-segment tallies; the serial path is the reference kept for testing.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mono/code_model.hpp"
#include "mono/dyadic.hpp"
#include "mono/monomial.hpp"

namespace mono {

inline constexpr int kMaxOracleDim = 24;  // 2^24 codewords

struct OracleOptions {
    bool parallel = true;
    int dim_cap = kMaxOracleDim;  // may be lowered, never raised past the constant
};

struct WeightDistribution {
    int m = 1;
    int dimension = 0;
    std::map<std::uint64_t, BigInt> entries;  // weight -> count, weight-sorted
};

WeightDistribution full_weight_distribution(const DecreasingSet& I, const OracleOptions& opt = {});

// ANF of every codeword of weight exactly w, sorted canonically.
std::vector<Poly> codewords_of_weight(const DecreasingSet& I, std::uint64_t w,
                                      const OracleOptions& opt = {});

// Codeword for one message word, bits in ordered_members() row order.
Poly message_to_poly(const DecreasingSet& I, std::uint64_t msg);

// Template classification of a single codeword with known weight. Precedence:
// weight 2^{m-deg} marks a single-monomial orbit member (reported as
// disjoint_k_sum, its k=1 case) regardless of ANF shape; otherwise the
// head/kernel split is pattern-matched, and a matching kernel under a
// nontrivial head reports "nested". Codewords matching nothing report
// "unexplained".
std::string classify_codeword(const Poly& p, std::uint64_t wt);

struct WeightClassReport {
    std::uint64_t weight = 0;
    BigInt total = 0;
    std::map<std::string, BigInt> per_class;  // kind -> count; includes "unexplained" when nonzero
    std::vector<Poly> unexplained_samples;    // at most 8, canonical order
};

WeightClassReport classify_weight_class(const DecreasingSet& I, std::uint64_t w,
                                        const OracleOptions& opt = {});

}  // namespace mono
