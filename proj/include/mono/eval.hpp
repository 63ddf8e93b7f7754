// Truth tables of polynomials over the m-cube, packed 64 points per word.
//
// Point t in [0, 2^m) encodes an assignment with x_i = bit i of t (x_0 is the
// LSB). A degree-s monomial's truth table is a stride pattern: constant words
// AND a fixed 64-bit tile, so evaluate() XORs whole subcube patterns per term
// and never walks single points. evaluate_reference() is the deliberately
// naive per-point loop kept as the oracle for the fast path.

#pragma once

#include <cstdint>
#include <vector>

#include "mono/monomial.hpp"

namespace mono {

inline constexpr int kMaxEvalVars = 30;  // 2^30 bits == 128 MiB, the supported ceiling

struct EvalVector {
    int m = 1;
    std::vector<std::uint64_t> words;  // ceil(2^m / 64) words, unused high bits zero

    std::uint64_t size_points() const { return std::uint64_t{1} << m; }
    bool get(std::uint64_t t) const { return (words[t >> 6] >> (t & 63)) & 1; }
    friend bool operator==(const EvalVector& a, const EvalVector& b) { return a.m == b.m && a.words == b.words; }
};

EvalVector evaluate(const Poly& p);             // subcube-pattern XOR accumulation
EvalVector evaluate_reference(const Poly& p);   // per-point loop, serial oracle
bool eval_point(const Poly& p, std::uint64_t t);
std::uint64_t popcount(const EvalVector& v);
std::uint64_t weight(const Poly& p);            // popcount(evaluate(p)); 2^{m-deg} for a single monomial

EvalVector xor_vec(const EvalVector& a, const EvalVector& b);
EvalVector and_vec(const EvalVector& a, const EvalVector& b);

}  // namespace mono
