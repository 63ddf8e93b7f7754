#include "mono/code_model.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace mono {

namespace {

void check_members(int m, const std::vector<Monomial>& ms) {
    if (m < 1) throw std::invalid_argument("ambient m must be positive");
    for (Monomial f : ms)
        if (max_index(f) >= m)
            throw std::invalid_argument("monomial " + to_string(f) + " uses a variable >= m");
}

// One-step predecessors in the decreasing order.
template <typename Fn>
void for_each_move(std::uint64_t mask, Fn&& fn) {
    std::uint64_t s = mask;
    while (s) {
        int j = std::countr_zero(s);
        s &= s - 1;
        std::uint64_t without = mask & ~(std::uint64_t{1} << j);
        fn(without);
        for (int jp = 0; jp < j; ++jp)
            if (!((mask >> jp) & 1)) fn(without | (std::uint64_t{1} << jp));
    }
}

}  // namespace

bool leq_decreasing(Monomial f, Monomial g) {
    if (degree(f) > degree(g)) return false;
    std::uint64_t fm = f.mask, gm = g.mask;
    // Pair largest with largest: each f-index must not exceed its partner.
    while (fm) {
        int fi = 63 - std::countl_zero(fm);
        int gi = 63 - std::countl_zero(gm);
        if (fi > gi) return false;
        fm &= ~(std::uint64_t{1} << fi);
        gm &= ~(std::uint64_t{1} << gi);
    }
    return true;
}

bool DecreasingSet::contains(Monomial f) const {
    return std::binary_search(members.begin(), members.end(), f.mask);
}

bool is_decreasing(int m, const std::vector<Monomial>& set) {
    check_members(m, set);
    std::unordered_set<std::uint64_t> in;
    for (Monomial f : set) in.insert(f.mask);
    for (Monomial f : set) {
        bool ok = true;
        for_each_move(f.mask, [&](std::uint64_t pred) {
            if (!in.count(pred)) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

DecreasingSet decreasing_closure(int m, const std::vector<Monomial>& gens) {
    check_members(m, gens);
    std::unordered_set<std::uint64_t> seen;
    std::queue<std::uint64_t> work;
    for (Monomial f : gens)
        if (seen.insert(f.mask).second) work.push(f.mask);
    while (!work.empty()) {
        std::uint64_t cur = work.front();
        work.pop();
        for_each_move(cur, [&](std::uint64_t pred) {
            if (seen.insert(pred).second) work.push(pred);
        });
    }
    DecreasingSet out;
    out.m = m;
    out.members.assign(seen.begin(), seen.end());
    std::sort(out.members.begin(), out.members.end());
    return out;
}

DecreasingSet make_decreasing_set(int m, const std::vector<Monomial>& members) {
    if (!is_decreasing(m, members))
        throw std::invalid_argument("monomial set is not downward closed");
    DecreasingSet out;
    out.m = m;
    for (Monomial f : members) out.members.push_back(f.mask);
    std::sort(out.members.begin(), out.members.end());
    out.members.erase(std::unique(out.members.begin(), out.members.end()), out.members.end());
    return out;
}

DecreasingSet reed_muller(int r, int m) {
    if (m < 1 || m > kMaxVars) throw std::invalid_argument("reed_muller: m out of range");
    if (r < 0 || r > m) throw std::invalid_argument("reed_muller: r out of range");
    DecreasingSet out;
    out.m = m;
    if (m <= 24) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask)
            if (std::popcount(mask) <= r) out.members.push_back(mask);
    } else {
        // Enumerate by degree to avoid walking all 2^m masks.
        for (int d = 0; d <= r; ++d) {
            std::vector<int> comb(static_cast<std::size_t>(d));
            for (int i = 0; i < d; ++i) comb[static_cast<std::size_t>(i)] = i;
            while (true) {
                std::uint64_t mask = 0;
                for (int i : comb) mask |= std::uint64_t{1} << i;
                out.members.push_back(mask);
                if (d == 0) break;
                int p = d - 1;
                while (p >= 0 && comb[static_cast<std::size_t>(p)] == m - d + p) --p;
                if (p < 0) break;
                ++comb[static_cast<std::size_t>(p)];
                for (int i = p + 1; i < d; ++i)
                    comb[static_cast<std::size_t>(i)] = comb[static_cast<std::size_t>(i - 1)] + 1;
            }
        }
        std::sort(out.members.begin(), out.members.end());
    }
    return out;
}

int r_plus(const DecreasingSet& I) {
    int best = -1;
    for (std::uint64_t mask : I.members) best = std::max(best, std::popcount(mask));
    return best;
}

BigInt min_distance(const DecreasingSet& I) {
    int rp = r_plus(I);
    if (rp < 0) throw std::domain_error("empty set has no minimum distance");
    return BigInt(1) << (I.m - rp);
}

bool contains_poly(const DecreasingSet& I, const Poly& p) {
    if (p.m != I.m) throw std::invalid_argument("ambient mismatch in contains_poly");
    for (std::uint64_t t : p.terms)
        if (!I.contains(Monomial{t})) return false;
    return true;
}

std::vector<Monomial> members_of_degree(const DecreasingSet& I, int deg) {
    std::vector<Monomial> out;
    for (std::uint64_t mask : I.members)
        if (std::popcount(mask) == deg) out.push_back(Monomial{mask});
    return out;
}

std::vector<std::uint64_t> ordered_members(const DecreasingSet& I) {
    std::vector<std::uint64_t> order = I.members;
    std::sort(order.begin(), order.end(), [](std::uint64_t a, std::uint64_t b) {
        int da = std::popcount(a), db = std::popcount(b);
        return da != db ? da < db : a < b;
    });
    return order;
}

std::vector<EvalVector> generator_matrix(const DecreasingSet& I) {
    if (I.m > kMaxEvalVars) throw std::domain_error("generator matrix needs m <= 30");
    std::vector<EvalVector> rows;
    rows.reserve(I.members.size());
    for (std::uint64_t mask : ordered_members(I)) rows.push_back(evaluate(make_poly(I.m, {mask})));
    return rows;
}

std::string row_to_hex(const EvalVector& v) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t nibbles = std::max<std::uint64_t>(v.size_points() / 4, 1);
    std::string out;
    out.reserve(static_cast<std::size_t>(nibbles));
    for (std::uint64_t i = 0; i < nibbles; ++i) {
        unsigned nib = static_cast<unsigned>((v.words[i >> 4] >> ((i & 15) * 4)) & 0xF);
        if (v.m == 1) nib &= 0x3;  // only points 0,1 exist
        out.push_back(digits[nib]);
    }
    return out;
}

std::vector<std::string> generator_matrix_hex(const DecreasingSet& I) {
    std::vector<std::string> out;
    for (const EvalVector& row : generator_matrix(I)) out.push_back(row_to_hex(row));
    return out;
}

int gf2_rank(std::vector<EvalVector> rows) {
    int rank = 0;
    std::size_t nrows = rows.size();
    for (std::size_t pivot_row = 0; pivot_row < nrows; ++pivot_row) {
        // Find the lowest set bit of this row, after elimination by earlier pivots.
        auto& words = rows[pivot_row].words;
        std::size_t w = 0;
        while (w < words.size() && words[w] == 0) ++w;
        if (w == words.size()) continue;
        ++rank;
        for (std::size_t other = pivot_row + 1; other < nrows; ++other) {
            auto& ow = rows[other].words;
            std::uint64_t bit = words[w] & (~words[w] + 1);
            if (ow[w] & bit)
                for (std::size_t i = 0; i < words.size(); ++i) ow[i] ^= words[i];
        }
    }
    return rank;
}

}  // namespace mono
