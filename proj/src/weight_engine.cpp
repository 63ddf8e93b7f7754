#include "mono/weight_engine.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace mono {

ResidualFamily ResidualFamily::make(Monomial head, std::vector<Monomial> tails, int m) {
    if (tails.empty()) throw std::invalid_argument("residual family needs at least one tail");
    if (tails.size() > kMaxTails) throw std::invalid_argument("tail count exceeds subset cap");
    std::set<std::uint64_t> seen;
    ResidualFamily fam;
    fam.head = head;
    fam.m = m;
    std::uint64_t all = head.mask;
    for (Monomial f : tails) {
        if (f.mask & head.mask) throw std::invalid_argument("tail shares a variable with the head");
        if (!seen.insert(f.mask).second) throw std::invalid_argument("duplicate tail monomial");
        fam.a_max = std::max(fam.a_max, degree(f));
        all |= f.mask;
    }
    if (m < 1) throw std::invalid_argument("ambient m must be positive");
    if (max_index(Monomial{all}) >= m) throw std::invalid_argument("variable index >= m in family");
    fam.tails = std::move(tails);
    fam.r = degree(head) + fam.a_max;
    std::uint64_t tail_union = 0;
    for (Monomial f : fam.tails) tail_union |= f.mask;
    fam.max_union_degree = std::popcount(tail_union);
    if (fam.r > m) throw std::invalid_argument("r exceeds ambient m");
    return fam;
}

Poly ResidualFamily::to_poly() const {
    std::vector<std::uint64_t> terms;
    terms.reserve(tails.size());
    for (Monomial f : tails) terms.push_back(f.mask | head.mask);
    return make_poly(m, std::move(terms));
}

ResidualFamily residual_family_of(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial has no residual family");
    std::uint64_t h = p.terms.front();
    for (std::uint64_t t : p.terms) h &= t;
    std::vector<Monomial> tails;
    tails.reserve(p.terms.size());
    for (std::uint64_t t : p.terms) tails.push_back(Monomial{t & ~h});
    return ResidualFamily::make(Monomial{h}, std::move(tails), p.m);
}

int union_degree(const ResidualFamily& fam, std::uint32_t subset) {
    if (subset == 0) throw std::invalid_argument("union_degree of the empty subset");
    std::uint64_t u = 0;
    std::uint32_t s = subset;
    while (s) {
        int i = std::countr_zero(s);
        if (i >= static_cast<int>(fam.tails.size())) throw std::invalid_argument("subset bit beyond tail count");
        u |= fam.tails[static_cast<std::size_t>(i)].mask;
        s &= s - 1;
    }
    return std::popcount(u);
}

SigmaResult sigma(const ResidualFamily& fam) {
    const int q = static_cast<int>(fam.tails.size());
    const int U = fam.max_union_degree;
    const std::uint32_t full = (q == 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << q) - 1);

    // Subset union masks by peel-lowest-bit DP, denominators cleared by 2^{U - a_max}:
    //   N = sum_S (-1)^{|S|-1} 2^{(U - u_S) + (|S| - 1)}, every exponent >= 0.
    std::vector<std::uint64_t> unions(static_cast<std::size_t>(full) + 1, 0);
    BigInt N = 0;
    SigmaResult out;
    for (std::uint32_t s = 1; s <= full; ++s) {
        std::uint32_t low = s & (s ^ (s - 1));
        unions[s] = unions[s & (s - 1)] | fam.tails[static_cast<std::size_t>(std::countr_zero(low))].mask;
        int u_s = std::popcount(unions[s]);
        int size = std::popcount(s);
        int e = (U - u_s) + (size - 1);
        if (size & 1) N += BigInt(1) << e; else N -= BigInt(1) << e;
        // grouped coefficient: term is (+/-) 2^{size-1} / 2^{u_s - a_max}
        out.c[(u_s - fam.a_max) - (size - 1)] += (size & 1) ? 1 : -1;
    }
    out.sigma = Dyadic(N, U - fam.a_max);
    // drop cancelled groups
    for (auto it = out.c.begin(); it != out.c.end();)
        it = (it->second == 0) ? out.c.erase(it) : std::next(it);
    return out;
}

std::vector<int> SigmaResult::even_coefficients() const {
    std::vector<int> out;
    for (const auto& [l, cl] : c)
        if (cl != 0 && (cl % 2) == 0) out.push_back(l);
    return out;
}

BigInt general_weight(const ResidualFamily& fam) {
    Dyadic wt = sigma(fam).sigma.times_pow2(fam.m - fam.r);
    if (!wt.is_integer()) throw std::logic_error("weight came out non-integral: " + wt.str());
    return wt.to_integer();
}

BigInt pie_weight(const std::vector<EvalVector>& rows, const std::vector<int>& J) {
    if (J.empty()) return 0;
    if (J.size() > static_cast<std::size_t>(kMaxTails)) throw std::invalid_argument("index subset exceeds cap");
    for (int j : J)
        if (j < 0 || j >= static_cast<int>(rows.size())) throw std::invalid_argument("row index out of range");
    const int q = static_cast<int>(J.size());

    // DFS over subsets with one partial AND buffer per depth.
    std::vector<EvalVector> partial(static_cast<std::size_t>(q) + 1);
    BigInt acc = 0;
    // rec(i, size): partial[size] holds the AND of the chosen rows among J[0..i)
    auto rec = [&](auto&& self, int i, int size) -> void {
        if (i == q) {
            if (size > 0) {
                BigInt term = BigInt(popcount(partial[static_cast<std::size_t>(size)])) << (size - 1);
                if (size & 1) acc += term; else acc -= term;
            }
            return;
        }
        self(self, i + 1, size);  // skip row J[i]
        const EvalVector& row = rows[static_cast<std::size_t>(J[static_cast<std::size_t>(i)])];
        partial[static_cast<std::size_t>(size) + 1] = (size == 0) ? row : and_vec(partial[static_cast<std::size_t>(size)], row);
        self(self, i + 1, size + 1);
    };
    rec(rec, 0, 0);
    return acc;
}

Dyadic DyadicWeight::reconstruct() const {
    Dyadic acc;
    for (int j : digits) acc = acc + Dyadic::pow2(j - k);
    return acc;
}

namespace {

DyadicWeight reduce_to_digits(const Dyadic& sig) {
    if (sig.num < 0) throw std::invalid_argument("dyadic weight must be nonnegative");
    DyadicWeight out;
    out.N = sig.num;
    out.k = sig.k;
    if (out.N != 0) {
        unsigned top = boost::multiprecision::msb(out.N);
        for (unsigned j = 0; j <= top; ++j)
            if (boost::multiprecision::bit_test(out.N, j)) out.digits.push_back(static_cast<int>(j));
    }
    return out;
}

}  // namespace

DyadicWeight dyadic_decompose(const Dyadic& sig, const ResidualFamily& fam) {
    int k0 = fam.max_union_degree - fam.a_max;
    Dyadic scaled = sig.times_pow2(k0);
    if (!scaled.is_integer())
        throw std::logic_error("2^{U-a_max} * Sigma is not integral: " + scaled.str());
    return reduce_to_digits(sig);
}

DyadicWeight dyadic_decompose(const Dyadic& sig) { return reduce_to_digits(sig); }

}  // namespace mono
