#include "mono/eval.hpp"

#include <bit>
#include <stdexcept>

namespace mono {

namespace {

// 64-point tile for variable j < 6: bit t set <=> bit j of t set.
constexpr std::uint64_t kVarTile[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};

void check_eval_domain(const Poly& p) {
    if (p.m > kMaxEvalVars) throw std::invalid_argument("evaluation cap exceeded: m = " + std::to_string(p.m));
}

}  // namespace

EvalVector evaluate(const Poly& p) {
    check_eval_domain(p);
    std::uint64_t points = std::uint64_t{1} << p.m;
    std::size_t nwords = static_cast<std::size_t>((points + 63) >> 6);
    EvalVector v{p.m, std::vector<std::uint64_t>(nwords, 0)};
    std::uint64_t point_mask = (p.m >= 6) ? ~std::uint64_t{0} : ((std::uint64_t{1} << points) - 1);

    for (std::uint64_t term : p.terms) {
        std::uint64_t tile = ~std::uint64_t{0};
        for (int j = 0; j < 6 && j < p.m; ++j)
            if (term & (std::uint64_t{1} << j)) tile &= kVarTile[j];
        tile &= point_mask;

        // Words whose index w satisfies the high part of the term: w superset of hi.
        std::uint64_t hi = term >> 6;
        std::uint64_t free_bits = ((nwords - 1) & ~hi);  // complement of hi within the word-index space
        std::uint64_t sub = 0;
        for (;;) {  // enumerate subsets of free_bits
            v.words[hi | sub] ^= tile;
            if (sub == free_bits) break;
            sub = (sub - free_bits) & free_bits;
        }
    }
    return v;
}

EvalVector evaluate_reference(const Poly& p) {
    check_eval_domain(p);
    std::uint64_t points = std::uint64_t{1} << p.m;
    std::size_t nwords = static_cast<std::size_t>((points + 63) >> 6);
    EvalVector v{p.m, std::vector<std::uint64_t>(nwords, 0)};
    for (std::uint64_t t = 0; t < points; ++t)
        if (eval_point(p, t)) v.words[t >> 6] |= std::uint64_t{1} << (t & 63);
    return v;
}

bool eval_point(const Poly& p, std::uint64_t t) {
    bool acc = false;
    for (std::uint64_t term : p.terms)
        if ((t & term) == term) acc = !acc;
    return acc;
}

std::uint64_t popcount(const EvalVector& v) {
    std::uint64_t n = 0;
    for (std::uint64_t w : v.words) n += static_cast<std::uint64_t>(std::popcount(w));
    return n;
}

std::uint64_t weight(const Poly& p) { return popcount(evaluate(p)); }

EvalVector xor_vec(const EvalVector& a, const EvalVector& b) {
    if (a.m != b.m) throw std::invalid_argument("ambient mismatch in xor_vec");
    EvalVector out = a;
    for (std::size_t i = 0; i < out.words.size(); ++i) out.words[i] ^= b.words[i];
    return out;
}

EvalVector and_vec(const EvalVector& a, const EvalVector& b) {
    if (a.m != b.m) throw std::invalid_argument("ambient mismatch in and_vec");
    EvalVector out = a;
    for (std::size_t i = 0; i < out.words.size(); ++i) out.words[i] &= b.words[i];
    return out;
}

}  // namespace mono
