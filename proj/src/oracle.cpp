#include "mono/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

#include "mono/eval.hpp"
#include "mono/templates.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mono {

namespace {

std::vector<EvalVector> checked_rows(const DecreasingSet& I, const OracleOptions& opt) {
    int cap = std::min(opt.dim_cap, kMaxOracleDim);
    if (static_cast<int>(I.members.size()) > cap)
        throw std::domain_error("dimension " + std::to_string(I.members.size()) +
                                " exceeds the enumeration cap " + std::to_string(cap));
    return generator_matrix(I);
}

EvalVector zero_vec(int m) {
    EvalVector v;
    v.m = m;
    v.words.assign(static_cast<std::size_t>(((std::uint64_t{1} << m) + 63) / 64), 0);
    return v;
}

EvalVector decode_message(const std::vector<EvalVector>& rows, int m, std::uint64_t msg) {
    EvalVector acc = zero_vec(m);
    while (msg) {
        int b = std::countr_zero(msg);
        msg &= msg - 1;
        const auto& rw = rows[static_cast<std::size_t>(b)].words;
        for (std::size_t i = 0; i < rw.size(); ++i) acc.words[i] ^= rw[i];
    }
    return acc;
}

// Visit messages gray(t) for t in [lo, hi); fn(gray_word, weight).
template <typename Fn>
void walk_segment(const std::vector<EvalVector>& rows, int m, std::uint64_t lo, std::uint64_t hi, Fn&& fn) {
    EvalVector acc = decode_message(rows, m, lo ^ (lo >> 1));
    for (std::uint64_t t = lo; t < hi; ++t) {
        if (t != lo) {
            const auto& rw = rows[static_cast<std::size_t>(std::countr_zero(t))].words;
            for (std::size_t i = 0; i < rw.size(); ++i) acc.words[i] ^= rw[i];
        }
        fn(t ^ (t >> 1), popcount(acc));
    }
}

using Tally = std::unordered_map<std::uint64_t, std::uint64_t>;

// Shared driver for distribution and weight-filtered listing: tally always,
// collect matching messages when want is set.
void enumerate_code(const DecreasingSet& I, const OracleOptions& opt,
                    Tally& tally, const std::uint64_t* want, std::vector<std::uint64_t>& hits) {
    std::vector<EvalVector> rows = checked_rows(I, opt);
    int dim = static_cast<int>(rows.size());
    const std::uint64_t total = std::uint64_t{1} << dim;

#ifdef _OPENMP
    if (opt.parallel) {
        int nthreads = omp_get_max_threads();
        std::uint64_t chunk = (total + static_cast<std::uint64_t>(nthreads) - 1) / nthreads;
        std::vector<Tally> tallies(static_cast<std::size_t>(nthreads));
        std::vector<std::vector<std::uint64_t>> hit_lists(static_cast<std::size_t>(nthreads));
#pragma omp parallel num_threads(nthreads)
        {
            int tid = omp_get_thread_num();
            std::uint64_t lo = std::min<std::uint64_t>(static_cast<std::uint64_t>(tid) * chunk, total);
            std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, total);
            if (lo < hi)
                walk_segment(rows, I.m, lo, hi, [&](std::uint64_t gray, std::uint64_t w) {
                    ++tallies[static_cast<std::size_t>(tid)][w];
                    if (want && w == *want) hit_lists[static_cast<std::size_t>(tid)].push_back(gray);
                });
        }
        for (auto& part : tallies)
            for (auto& [w, c] : part) tally[w] += c;
        for (auto& part : hit_lists) hits.insert(hits.end(), part.begin(), part.end());
        std::sort(hits.begin(), hits.end());
        return;
    }
#endif
    walk_segment(rows, I.m, 0, total, [&](std::uint64_t gray, std::uint64_t w) {
        ++tally[w];
        if (want && w == *want) hits.push_back(gray);
    });
    std::sort(hits.begin(), hits.end());
}

// Kernel ANF pattern matching; empty string when nothing fits.
std::string match_kernel(const Poly& q) {
    const auto& ts = q.terms;
    if (ts.empty()) return "";

    bool pairwise_disjoint = true;
    for (std::size_t i = 0; i < ts.size() && pairwise_disjoint; ++i)
        for (std::size_t j = i + 1; j < ts.size(); ++j)
            if (ts[i] & ts[j]) { pairwise_disjoint = false; break; }

    int dmax = 0, dmin = kMaxVars;
    for (std::uint64_t t : ts) {
        dmax = std::max(dmax, std::popcount(t));
        dmin = std::min(dmin, std::popcount(t));
    }

    if (pairwise_disjoint && dmin == dmax && dmin >= 1) return "disjoint_k_sum";

    if (pairwise_disjoint && ts.size() >= 2 && dmax >= 2 && dmin == dmax - 1) {
        int low_count = 0;
        for (std::uint64_t t : ts)
            if (std::popcount(t) == dmin) ++low_count;
        if (low_count == 1) return "rank_ell_degree_drop";
    }

    if (ts.size() == 3) {
        // Flip shape f + x_j g + g: some pair differs by exactly one variable.
        for (int gi = 0; gi < 3; ++gi)
            for (int bi = 0; bi < 3; ++bi) {
                if (gi == bi) continue;
                std::uint64_t g = ts[static_cast<std::size_t>(gi)], b = ts[static_cast<std::size_t>(bi)];
                if ((g & ~b) != 0 || std::popcount(b ^ g) != 1) continue;
                std::uint64_t jbit = b ^ g;
                std::uint64_t f = ts[static_cast<std::size_t>(3 - gi - bi)];
                if ((f & jbit) && (g & f) == 0) return "complementary_flip";
            }
        bool all_cubic = std::popcount(ts[0]) == 3 && std::popcount(ts[1]) == 3 && std::popcount(ts[2]) == 3;
        if (all_cubic) {
            int i01 = std::popcount(ts[0] & ts[1]);
            int i02 = std::popcount(ts[0] & ts[2]);
            int i12 = std::popcount(ts[1] & ts[2]);
            int u = std::popcount(ts[0] | ts[1] | ts[2]);
            if (i01 == 1 && i02 == 1 && i12 == 1 && u == 6) return "shared_3term_b";
            int ones = (i01 == 1) + (i02 == 1) + (i12 == 1);
            int zeros = (i01 == 0) + (i02 == 0) + (i12 == 0);
            if (ones == 2 && zeros == 1 && u == 7) return "shared_3term_c";
        }
    }
    return "";
}

}  // namespace

WeightDistribution full_weight_distribution(const DecreasingSet& I, const OracleOptions& opt) {
    Tally tally;
    std::vector<std::uint64_t> unused;
    enumerate_code(I, opt, tally, nullptr, unused);
    WeightDistribution out;
    out.m = I.m;
    out.dimension = static_cast<int>(I.members.size());
    for (auto& [w, c] : tally) out.entries[w] = c;
    return out;
}

Poly message_to_poly(const DecreasingSet& I, std::uint64_t msg) {
    std::vector<std::uint64_t> order = ordered_members(I);
    std::vector<std::uint64_t> terms;
    while (msg) {
        int b = std::countr_zero(msg);
        msg &= msg - 1;
        terms.push_back(order.at(static_cast<std::size_t>(b)));
    }
    return make_poly(I.m, std::move(terms));
}

std::vector<Poly> codewords_of_weight(const DecreasingSet& I, std::uint64_t w,
                                      const OracleOptions& opt) {
    Tally tally;
    std::vector<std::uint64_t> hits;
    enumerate_code(I, opt, tally, &w, hits);
    std::vector<Poly> out;
    out.reserve(hits.size());
    for (std::uint64_t msg : hits) out.push_back(message_to_poly(I, msg));
    std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) { return a.terms < b.terms; });
    return out;
}

std::string classify_codeword(const Poly& p, std::uint64_t wt) {
    if (p.is_zero()) return "zero";
    int deg = degree(p);
    if (wt == std::uint64_t{1} << (p.m - deg)) return "disjoint_k_sum";
    HeadKernel hk = factor_head_kernel(p);
    std::string base = match_kernel(hk.kernel);
    if (base.empty()) return "unexplained";
    return hk.head.mask == 0 ? base : "nested";
}

WeightClassReport classify_weight_class(const DecreasingSet& I, std::uint64_t w,
                                        const OracleOptions& opt) {
    WeightClassReport rep;
    rep.weight = w;
    for (const Poly& p : codewords_of_weight(I, w, opt)) {
        rep.total += 1;
        std::string cls = classify_codeword(p, w);
        rep.per_class[cls] += 1;
        if (cls == "unexplained" && rep.unexplained_samples.size() < 8)
            rep.unexplained_samples.push_back(p);
    }
    return rep;
}

}  // namespace mono
