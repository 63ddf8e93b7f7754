#include "mono/enumerators.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

#include "mono/oracle.hpp"
#include "mono/templates.hpp"

namespace mono {

namespace {

// alpha depends only on the indices occurring in h, u, v, so it is evaluated
// at the smallest ambient dimension containing them and cached by masks.
using AlphaMemo = std::map<std::array<std::uint64_t, 3>, std::optional<int>>;

std::optional<int> pair_alpha(Monomial u, Monomial v, Monomial h, AlphaMemo& memo) {
    if (u.mask > v.mask) std::swap(u, v);
    std::array<std::uint64_t, 3> key{h.mask, u.mask, v.mask};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    int top = std::max({max_index(u), max_index(v), max_index(h)});
    int ambient = top + 1;
    std::optional<int> alpha;
    if (ambient <= kMaxExplicitGroupVars) {
        CollisionReport rep = collision_exponent(u, v, h, ambient);
        if (rep.power_of_two) alpha = rep.alpha;
    }
    memo.emplace(key, alpha);
    return alpha;
}

BigInt factorial(int k) {
    BigInt f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

void extend_tuples(const std::vector<Monomial>& fs, int k, std::size_t start,
                   std::uint64_t used, std::vector<Monomial>& current,
                   std::vector<std::vector<Monomial>>& out) {
    if (static_cast<int>(current.size()) == k) {
        out.push_back(current);
        return;
    }
    int need = k - static_cast<int>(current.size());
    for (std::size_t i = start; i + need <= fs.size(); ++i) {
        if (fs[i].mask & used) continue;
        current.push_back(fs[i]);
        extend_tuples(fs, k, i + 1, used | fs[i].mask, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<std::vector<Monomial>> enumerate_disjoint_tuples(const DecreasingSet& I, int r, int k) {
    if (r < 1) throw std::invalid_argument("tuple degree must be at least 1");
    if (k < 1) throw std::invalid_argument("tuple size must be at least 1");
    std::vector<Monomial> fs = members_of_degree(I, r);
    std::vector<std::vector<Monomial>> out;
    std::vector<Monomial> current;
    extend_tuples(fs, k, 0, 0, current, out);
    return out;
}

EnumerationReport count_disjoint_k_sum(const DecreasingSet& I, int r, int k,
                                       const DisjointCountOptions& opt) {
    if (k * r > I.m) throw std::invalid_argument("k*r exceeds the number of variables");
    EnumerationReport report;
    report.weight = disjoint_k_sum_weight(r, k, I.m);

    AlphaMemo memo;
    Monomial one{0};
    for (const auto& tuple : enumerate_disjoint_tuples(I, r, k)) {
        int exponent = k * r;
        for (Monomial f : tuple) exponent += partition_weight(f);
        bool usable = true;
        if (opt.collision_corrected) {
            for (std::size_t a = 0; a < tuple.size() && usable; ++a) {
                for (std::size_t b = a + 1; b < tuple.size(); ++b) {
                    std::optional<int> alpha = pair_alpha(tuple[a], tuple[b], one, memo);
                    if (!alpha) {
                        usable = false;
                        break;
                    }
                    exponent -= *alpha;
                }
            }
        }
        if (!usable) {
            report.incomplete = true;
            continue;
        }
        SeedDescriptor seed;
        seed.kind = SeedDescriptor::Kind::kDisjointTuple;
        seed.h = one;
        seed.S = tuple;
        seed.exponent = exponent;
        report.total_count += BigInt(1) << exponent;
        report.seeds.push_back(std::move(seed));
    }
    if (opt.ordered) report.total_count *= factorial(k);
    return report;
}

namespace {

struct NestedContext {
    const DecreasingSet* I;
    int r;
    AlphaMemo memo;
    EnumerationReport* report;
};

// Emits every seed (h; S; x_j) for the current head and quotient set.
void emit_nested_seeds(NestedContext& ctx, Monomial h, const std::vector<Monomial>& fs,
                       const std::vector<Monomial>& qs, std::uint64_t used) {
    int m = ctx.I->m;
    int base = (ctx.r - 2) + partition_weight(h);
    for (Monomial q : qs) base += 2 + constrained_partition_weight(h, q);

    bool usable = true;
    for (std::size_t a = 0; a < qs.size() && usable; ++a) {
        for (std::size_t b = a + 1; b < qs.size(); ++b) {
            std::optional<int> alpha = pair_alpha(qs[a], qs[b], h, ctx.memo);
            if (!alpha) {
                usable = false;
                break;
            }
            base -= *alpha;
        }
    }
    if (!usable) {
        ctx.report->incomplete = true;
        return;
    }

    Monomial occupied{used};
    for (int j = 0; j < m; ++j) {
        std::uint64_t jbit = std::uint64_t(1) << j;
        if (used & jbit) continue;
        if (qs.empty() && j < max_index(h)) continue;  // canonical form of a plain member
        Monomial xj{jbit};
        if (!ctx.I->contains(Monomial{h.mask | jbit})) continue;
        SeedDescriptor seed;
        seed.kind = SeedDescriptor::Kind::kNestedDegreeDrop;
        seed.h = h;
        seed.S = fs;
        seed.j = j;
        seed.exponent = base + 1 +
                        (qs.empty() ? constrained_partition_weight(h, xj)
                                    : constrained_partition_weight(occupied, xj));
        ctx.report->total_count += BigInt(1) << seed.exponent;
        ctx.report->seeds.push_back(std::move(seed));
    }
}

// Grows S over the candidate multiples of h whose quotients stay disjoint.
void extend_nested(NestedContext& ctx, Monomial h, const std::vector<Monomial>& candidates,
                   std::size_t start, std::vector<Monomial>& fs, std::vector<Monomial>& qs,
                   std::uint64_t used) {
    emit_nested_seeds(ctx, h, fs, qs, used);
    for (std::size_t i = start; i < candidates.size(); ++i) {
        Monomial q{candidates[i].mask & ~h.mask};
        if (q.mask & used) continue;
        fs.push_back(candidates[i]);
        qs.push_back(q);
        extend_nested(ctx, h, candidates, i + 1, fs, qs, used | q.mask);
        fs.pop_back();
        qs.pop_back();
    }
}

}  // namespace

EnumerationReport count_nested_degree_drop(const DecreasingSet& I, int r) {
    if (r < 2) throw std::invalid_argument("degree-drop counting needs degree at least 2");
    if (r > I.m) throw std::invalid_argument("degree exceeds the number of variables");
    EnumerationReport report;
    report.weight = BigInt(1) << (I.m - r + 1);

    NestedContext ctx{&I, r, {}, &report};
    for (Monomial h : members_of_degree(I, r - 2)) {
        std::vector<Monomial> candidates;
        for (Monomial f : members_of_degree(I, r))
            if (divides(h, f)) candidates.push_back(f);
        std::vector<Monomial> fs, qs;
        extend_nested(ctx, h, candidates, 0, fs, qs, h.mask);
    }
    return report;
}

void attach_oracle_comparison(EnumerationReport& report, const DecreasingSet& I) {
    WeightDistribution dist = full_weight_distribution(I);
    std::uint64_t w = report.weight.convert_to<std::uint64_t>();
    OracleComparison cmp;
    auto it = dist.entries.find(w);
    if (it != dist.entries.end()) cmp.oracle_count = it->second;
    cmp.equal = (cmp.oracle_count == report.total_count);
    cmp.exceeds = (report.total_count > cmp.oracle_count);
    report.verified = cmp;
}

MasterOrbit master_orbit_size(Monomial h, const Poly& q, int m) {
    if (q.is_zero()) throw std::invalid_argument("kernel must be nonzero");
    std::vector<Monomial> tails;
    for (std::uint64_t t : q.terms) tails.push_back(Monomial{t});

    MasterOrbit out;
    out.head_exponent = degree(h) + partition_weight(h);
    KernelFreedom kf = kernel_freedom(h, tails, m);
    out.beta = kf.beta;
    out.beta_mix = kf.beta_mix;
    for (std::size_t a = 0; a < tails.size(); ++a) {
        for (std::size_t b = a + 1; b < tails.size(); ++b) {
            CollisionReport rep = collision_exponent(tails[a], tails[b], h, m);
            if (rep.power_of_two)
                out.alpha += rep.alpha;
            else
                out.alpha_all_power_of_two = false;
            out.pairs.push_back(rep);
        }
    }

    Poly p = mul(h, q);
    OrbitOptions stab_opt;
    stab_opt.keep_elements = false;
    if (degree(h) > 0) stab_opt.fix_head = h;
    out.stabilizer_orbit = orbit(p, stab_opt).size;
    OrbitOptions full_opt;
    full_opt.keep_elements = false;
    out.full_orbit = orbit(p, full_opt).size;
    return out;
}

}  // namespace mono
