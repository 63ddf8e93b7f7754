#include "mono/templates.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "mono/weight_engine.hpp"

namespace mono {

namespace {

void check_ambient(const std::vector<Monomial>& ms, int m) {
    if (m < 1 || m > kMaxVars) throw std::invalid_argument("ambient m out of range");
    for (Monomial f : ms)
        if (max_index(f) >= m)
            throw std::invalid_argument("monomial " + to_string(f) + " uses a variable >= m");
}

void check_pairwise_disjoint(const std::vector<Monomial>& ms) {
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j)
            if (ms[i].mask & ms[j].mask)
                throw std::invalid_argument("supports overlap: " + to_string(ms[i]) + ", " + to_string(ms[j]));
}

TemplateInstance finish(TemplateKind kind, Monomial head, Poly kernel, int m, int r, Dyadic sig) {
    TemplateInstance out;
    out.kind = kind;
    out.head = head;
    out.kernel = kernel;
    out.poly = mul(head, kernel);
    out.m = m;
    out.r = r;
    out.predicted_sigma = sig;
    out.predicted_weight = sig.times_pow2(m - r).to_integer();
    return out;
}

}  // namespace

std::string to_string(TemplateKind kind) {
    switch (kind) {
        case TemplateKind::kDisjointKSum: return "disjoint_k_sum";
        case TemplateKind::kRankEllDegreeDrop: return "rank_ell_degree_drop";
        case TemplateKind::kComplementaryFlip: return "complementary_flip";
        case TemplateKind::kShared3TermB: return "shared_3term_b";
        case TemplateKind::kShared3TermC: return "shared_3term_c";
        case TemplateKind::kNested: return "nested";
    }
    return "unknown";
}

Dyadic sigma_k(int r, int k) {
    if (r < 1 || k < 1) throw std::invalid_argument("sigma_k needs r >= 1, k >= 1");
    Dyadic base = Dyadic(1) - Dyadic::pow2(1 - r);
    return (Dyadic(1) - dyadic_pow(base, k)).times_pow2(r - 1);
}

BigInt disjoint_k_sum_weight(int r, int k, int m) {
    if (r < 1 || k < 1) throw std::invalid_argument("weight formula needs r >= 1, k >= 1");
    if (k * r > m) throw std::invalid_argument("k*r exceeds m");
    Dyadic inner = Dyadic(BigInt(1) << (k * r)) - dyadic_pow(Dyadic((BigInt(1) << r) - 2), k);
    return inner.times_pow2(m - k * r - 1).to_integer();
}

TemplateInstance disjoint_k_sum(const std::vector<Monomial>& fs, int m) {
    if (fs.empty()) throw std::invalid_argument("need at least one monomial");
    check_ambient(fs, m);
    check_pairwise_disjoint(fs);
    int r = degree(fs.front());
    for (Monomial f : fs)
        if (degree(f) != r) throw std::invalid_argument("tails must share one degree");
    int k = static_cast<int>(fs.size());
    if (r < 1 && k > 1) throw std::invalid_argument("degree-0 tails cannot be disjoint");
    if (k * r > m) throw std::invalid_argument("k*r exceeds m");
    TemplateInstance out =
        finish(TemplateKind::kDisjointKSum, Monomial{0}, poly_from_monomials(m, fs), m, r, sigma_k(std::max(r, 1), k));
    if (r >= 1 && out.predicted_weight != disjoint_k_sum_weight(r, k, m))
        throw std::logic_error("sigma and weight closed forms disagree");
    return out;
}

SigmaScan classify_sigma_k(int r_max, int k_max) {
    if (r_max < 1 || k_max < 1 || r_max > 16 || k_max > 16)
        throw std::invalid_argument("scan bounds must lie in [1,16]");
    SigmaScan out;
    const Dyadic two(2), five_halves(BigInt(5), 1);
    for (int r = 1; r <= r_max; ++r)
        for (int k = 1; k <= k_max; ++k) {
            Dyadic s = sigma_k(r, k);
            if (s < two) out.below_two.emplace_back(r, k);
            else if (s < five_halves) out.two_to_half.emplace_back(r, k);
            else out.at_least_half.emplace_back(r, k);
        }
    return out;
}

TemplateInstance rank_ell_degree_drop(const std::vector<Monomial>& fs, Monomial g, int m) {
    std::vector<Monomial> all = fs;
    all.push_back(g);
    check_ambient(all, m);
    check_pairwise_disjoint(all);
    int r = degree(g) + 1;
    if (r < 2) throw std::invalid_argument("needs deg(g) >= 1");
    for (Monomial f : fs)
        if (degree(f) != r)
            throw std::invalid_argument("every f must have degree deg(g)+1");
    int ell = static_cast<int>(fs.size());
    Dyadic a = Dyadic(1) - Dyadic::pow2(1 - r);
    Dyadic b = Dyadic(1) - Dyadic::pow2(2 - r);
    Dyadic sig = (Dyadic(1) - dyadic_pow(a, ell) * b).times_pow2(r - 1);
    return finish(TemplateKind::kRankEllDegreeDrop, Monomial{0}, poly_from_monomials(m, all), m, r, sig);
}

TemplateInstance complementary_flip(Monomial f, int j, Monomial g, int m) {
    check_ambient({f, g}, m);
    if (j < 0 || j >= m) throw std::invalid_argument("flip variable out of range");
    if (!((f.mask >> j) & 1))
        throw std::invalid_argument("flip variable must divide f");
    if (g.mask & (f.mask | (std::uint64_t{1} << j)))
        throw std::invalid_argument("g must avoid ind(f) and the flip variable");
    int r = degree(f), s = degree(g);
    Poly p = make_poly(m, {f.mask, g.mask | (std::uint64_t{1} << j), g.mask});
    Dyadic sig = Dyadic(1) + Dyadic::pow2(r - s - 1);
    return finish(TemplateKind::kComplementaryFlip, Monomial{0}, p, m, r, sig);
}

BigInt flip_weight_outside_head(int r, int s, int m) {
    Dyadic sig = Dyadic(1) + Dyadic::pow2(r - s - 1) - Dyadic::pow2(-s);
    return sig.times_pow2(m - r).to_integer();
}

TemplateInstance shared_3term(Monomial h, SharedKernelVariant variant, int m) {
    int need = variant == SharedKernelVariant::kB ? 6 : 7;
    std::vector<int> labels;
    for (int i = 0; i < m && static_cast<int>(labels.size()) < need; ++i)
        if (!((h.mask >> i) & 1)) labels.push_back(i);
    return shared_3term(h, variant, m, labels);
}

TemplateInstance shared_3term(Monomial h, SharedKernelVariant variant, int m,
                              const std::vector<int>& labels) {
    check_ambient({h}, m);
    std::size_t need = variant == SharedKernelVariant::kB ? 6 : 7;
    if (labels.size() != need)
        throw std::invalid_argument("variant needs exactly " + std::to_string(need) + " kernel variables");
    std::uint64_t used = h.mask;
    for (int v : labels) {
        if (v < 0 || v >= m) throw std::invalid_argument("kernel variable out of range");
        std::uint64_t bit = std::uint64_t{1} << v;
        if (used & bit) throw std::invalid_argument("kernel variables must be distinct and avoid the head");
        used |= bit;
    }
    auto term = [&](int a, int b, int c) {
        return (std::uint64_t{1} << labels[static_cast<std::size_t>(a)]) |
               (std::uint64_t{1} << labels[static_cast<std::size_t>(b)]) |
               (std::uint64_t{1} << labels[static_cast<std::size_t>(c)]);
    };
    Poly kernel = variant == SharedKernelVariant::kB
        ? make_poly(m, {term(0, 1, 2), term(1, 3, 4), term(2, 3, 5)})
        : make_poly(m, {term(0, 1, 2), term(2, 3, 4), term(3, 5, 6)});
    int r = degree(h) + 3;
    TemplateKind kind = variant == SharedKernelVariant::kB ? TemplateKind::kShared3TermB
                                                           : TemplateKind::kShared3TermC;
    return finish(kind, h, kernel, m, r, Dyadic(2));
}

TemplateInstance nest(Monomial h, const Poly& q) {
    if (q.is_zero()) throw std::invalid_argument("kernel must be nonzero");
    check_ambient({h}, q.m);
    for (std::uint64_t t : q.terms)
        if (t & h.mask) throw std::invalid_argument("head shares a variable with the kernel");
    int s = degree(h), t = degree(q), m = q.m;
    int r = s + t;
    BigInt wq = general_weight(residual_family_of(q));
    // h and q are variable-disjoint, so weight(h*q) = weight(q) / 2^s exactly.
    Dyadic sig = Dyadic(wq).times_pow2(r - s - m);
    return finish(TemplateKind::kNested, h, q, m, r, sig);
}

Dyadic nested_sigma(const Dyadic& sigma_q, int s, int t, int r) {
    if (r < s + t) throw std::invalid_argument("ambient degree below deg(h)+deg(Q)");
    return sigma_q.times_pow2(r - (s + t));
}

HeadKernel factor_head_kernel(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("zero polynomial has no head/kernel split");
    std::uint64_t common = p.terms.front();
    for (std::uint64_t t : p.terms) common &= t;
    std::vector<std::uint64_t> kernel_terms;
    kernel_terms.reserve(p.terms.size());
    for (std::uint64_t t : p.terms) kernel_terms.push_back(t & ~common);
    return HeadKernel{Monomial{common}, make_poly(p.m, std::move(kernel_terms))};
}

}  // namespace mono
