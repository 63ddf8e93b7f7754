// Structural weight templates with exact closed-form predictions.
//
// Each constructor builds the polynomial, records head/kernel, and computes
// the predicted normalized weight Sigma and the predicted Hamming weight
// d * Sigma (d = 2^{m-r}) in exact dyadic arithmetic. The predictions are
// closed forms; the subset-sum engine and the evaluation oracle re-derive
// them independently in the tests.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mono/dyadic.hpp"
#include "mono/monomial.hpp"

namespace mono {

enum class TemplateKind {
    kDisjointKSum,
    kRankEllDegreeDrop,
    kComplementaryFlip,
    kShared3TermB,
    kShared3TermC,
    kNested,
};

std::string to_string(TemplateKind kind);

struct TemplateInstance {
    TemplateKind kind;
    Poly poly;        // == mul(head, kernel)
    Monomial head;    // constant 1 for the head-free templates
    Poly kernel;
    int m = 1;
    int r = 0;        // ambient degree: d = 2^{m-r}
    Dyadic predicted_sigma;
    BigInt predicted_weight;  // == predicted_sigma * 2^{m-r}, always integral
};

// Sum of k pairwise-disjoint degree-r monomials.
//   Sigma_k(r) = 2^{r-1} (1 - (1 - 2^{1-r})^k)
//   weight     = 2^{m-kr-1} (2^{kr} - (2^r - 2)^k)
Dyadic sigma_k(int r, int k);
BigInt disjoint_k_sum_weight(int r, int k, int m);
TemplateInstance disjoint_k_sum(const std::vector<Monomial>& fs, int m);

// Exhaustive Sigma_k(r) range scan over 1 <= r <= r_max, 1 <= k <= k_max.
struct SigmaScan {
    std::vector<std::pair<int, int>> below_two;      // Sigma < 2
    std::vector<std::pair<int, int>> two_to_half;    // 2 <= Sigma < 5/2
    std::vector<std::pair<int, int>> at_least_half;  // Sigma >= 5/2
};
SigmaScan classify_sigma_k(int r_max, int k_max);

// ell pairwise-disjoint degree-r monomials plus one disjoint degree-(r-1)
// monomial g (ell may be 0); r = deg(g) + 1 >= 2.
//   weight = 2^{m-1} (1 - (1 - 2^{1-r})^ell (1 - 2^{2-r}))
TemplateInstance rank_ell_degree_drop(const std::vector<Monomial>& fs, Monomial g, int m);

// P = f + (x_j + 1) g with j in ind(f) and ind(g) disjoint from ind(f).
//   weight = d (1 + 2^{r-s-1}), r = deg f, s = deg g, d = 2^{m-r}.
// j in ind(f) is required: with j outside ind(f) the closed form above fails
// and the true weight is d (1 + 2^{r-s-1} - 2^{-s}), exposed below for tests.
TemplateInstance complementary_flip(Monomial f, int j, Monomial g, int m);
BigInt flip_weight_outside_head(int r, int s, int m);

// h * (three degree-3 tails sharing variables pairwise). Variant B: pairwise
// shares are three distinct variables (six kernel variables); variant C: a
// chain with shares sizes 1,1,0 (seven kernel variables). Sigma = 2 for both.
// Labels map the kernel's variable slots to ambient indices; the default is
// the lowest indices free of the head.
enum class SharedKernelVariant { kB, kC };
TemplateInstance shared_3term(Monomial h, SharedKernelVariant variant, int m);
TemplateInstance shared_3term(Monomial h, SharedKernelVariant variant, int m,
                              const std::vector<int>& labels);

// P = h * Q with h variable-disjoint from Q and r = deg h + deg Q, so
// Sigma(P) = Sigma(Q) and weight(P) = weight(Q) / 2^{deg h}.
TemplateInstance nest(Monomial h, const Poly& q);
// The r > s+t form of the scaling law as a query: Sigma(P) = 2^{r-(s+t)} Sigma(Q).
Dyadic nested_sigma(const Dyadic& sigma_q, int s, int t, int r);

struct HeadKernel {
    Monomial head;
    Poly kernel;
};
// h = gcd of all terms (the gcd of the maximal-degree terms shrunk until it
// divides everything), kernel = p with h divided out; mul(head, kernel) == p.
HeadKernel factor_head_kernel(const Poly& p);

}  // namespace mono
