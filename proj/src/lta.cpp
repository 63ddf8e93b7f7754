#include "mono/lta.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mono {

namespace {

void check_group_domain(int m) {
    if (m < 1 || m > kMaxExplicitGroupVars)
        throw std::invalid_argument("explicit group enumeration supports 1 <= m <= 6, got m = " + std::to_string(m));
}

// Multiply the term list by (vars + const), vars given as an index mask,
// plus_one set when the affine form has constant 1. XOR semantics: sort and
// drop cancelling pairs.
void mul_affine_form(std::vector<std::uint64_t>& acc, std::uint64_t vars, bool plus_one,
                     std::vector<std::uint64_t>& scratch) {
    scratch.clear();
    for (std::uint64_t t : acc) {
        std::uint64_t v = vars;
        while (v) {
            scratch.push_back(t | (v & (~v + 1)));
            v &= v - 1;
        }
        if (plus_one) scratch.push_back(t);
    }
    std::sort(scratch.begin(), scratch.end());
    acc.clear();
    for (std::size_t i = 0; i < scratch.size();) {
        std::size_t j = i;
        while (j < scratch.size() && scratch[j] == scratch[i]) ++j;
        if ((j - i) & 1) acc.push_back(scratch[i]);
        i = j;
    }
}

// Image terms of one monomial, appended to out (not collapsed).
void apply_monomial_terms(const LtaElement& g, std::uint64_t fmask,
                          std::vector<std::uint64_t>& out,
                          std::vector<std::uint64_t>& acc,
                          std::vector<std::uint64_t>& scratch) {
    acc.assign(1, 0);  // the constant 1
    std::uint64_t f = fmask;
    while (f) {
        int i = std::countr_zero(f);
        f &= f - 1;
        std::uint64_t vars = (std::uint64_t{1} << i) | g.row[static_cast<std::size_t>(i)];
        mul_affine_form(acc, vars, (g.eps >> i) & 1, scratch);
        if (acc.empty()) return;  // a zero factor kills the product
    }
    out.insert(out.end(), acc.begin(), acc.end());
}

PolyKey apply_key(const LtaElement& g, const std::vector<std::uint64_t>& terms,
                  std::vector<std::uint64_t>& out,
                  std::vector<std::uint64_t>& acc,
                  std::vector<std::uint64_t>& scratch) {
    out.clear();
    for (std::uint64_t t : terms) apply_monomial_terms(g, t, out, acc, scratch);
    std::sort(out.begin(), out.end());
    PolyKey key;
    for (std::size_t i = 0; i < out.size();) {
        std::size_t j = i;
        while (j < out.size() && out[j] == out[i]) ++j;
        if ((j - i) & 1) key.push_back(out[i]);
        i = j;
    }
    return key;
}

struct KeyHash {
    std::size_t operator()(const PolyKey& k) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (std::uint64_t t : k) {
            h ^= t + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdull;
        }
        return static_cast<std::size_t>(h);
    }
};

using KeySet = std::unordered_set<PolyKey, KeyHash>;

OrbitSummary summarize(KeySet&& set, bool keep) {
    OrbitSummary out;
    out.size = set.size();
    if (keep) {
        out.elements.assign(set.begin(), set.end());
        std::sort(out.elements.begin(), out.elements.end());
    }
    return out;
}

}  // namespace

int lta_param_bits(int m) { return m * (m - 1) / 2 + m; }

LtaElement lta_element_from_code(int m, std::uint32_t code) {
    check_group_domain(m);
    LtaElement g;
    g.m = m;
    g.row.assign(static_cast<std::size_t>(m), 0);
    int pos = 0;
    for (int i = 1; i < m; ++i) {
        g.row[static_cast<std::size_t>(i)] = (code >> pos) & ((std::uint64_t{1} << i) - 1);
        pos += i;
    }
    g.eps = (code >> pos) & ((std::uint64_t{1} << m) - 1);
    return g;
}

std::uint32_t lta_code_from_element(const LtaElement& g) {
    std::uint32_t code = 0;
    int pos = 0;
    for (int i = 1; i < g.m; ++i) {
        code |= static_cast<std::uint32_t>(g.row[static_cast<std::size_t>(i)]) << pos;
        pos += i;
    }
    code |= static_cast<std::uint32_t>(g.eps) << pos;
    return code;
}

LtaElement lta_identity(int m) {
    LtaElement g;
    g.m = m;
    g.row.assign(static_cast<std::size_t>(m), 0);
    g.eps = 0;
    return g;
}

LtaElement lta_compose(const LtaElement& g, const LtaElement& h) {
    if (g.m != h.m) throw std::invalid_argument("ambient mismatch in compose");
    // (g∘h)(x_i): substitute h into g's image of x_i. Row masks stay strictly
    // lower triangular because h maps x_j into span{x_0..x_j, 1}.
    LtaElement out = lta_identity(g.m);
    for (int i = 0; i < g.m; ++i) {
        std::uint64_t vars = std::uint64_t{1} << i;  // start from g's x_i term...
        std::uint64_t lin = 0;
        bool c = (g.eps >> i) & 1;
        vars |= g.row[static_cast<std::size_t>(i)];
        std::uint64_t v = vars;
        while (v) {
            int j = std::countr_zero(v);
            v &= v - 1;
            lin ^= (std::uint64_t{1} << j) | h.row[static_cast<std::size_t>(j)];
            c ^= (h.eps >> j) & 1;
        }
        out.row[static_cast<std::size_t>(i)] = lin & ~(std::uint64_t{1} << i);
        if (!((lin >> i) & 1)) throw std::logic_error("composition lost the diagonal");
        out.eps |= std::uint64_t{c} << i;
    }
    return out;
}

Poly apply(const LtaElement& g, const Poly& p) {
    if (g.m != p.m) throw std::invalid_argument("ambient mismatch in apply");
    std::vector<std::uint64_t> out, acc, scratch;
    PolyKey key = apply_key(g, p.terms, out, acc, scratch);
    return Poly{p.m, std::move(key)};
}

Poly apply(const LtaElement& g, Monomial f, int m) {
    return apply(g, make_poly(m, {f.mask}));
}

int partition_weight(Monomial f) {
    int w = 0, t = 0;
    for (int i : indices(f)) w += i - t++;
    return w;
}

int constrained_partition_weight(Monomial occupied, Monomial g) {
    int w = 0;
    std::uint64_t occ = occupied.mask;
    for (int j : indices(g)) {
        std::uint64_t below = (std::uint64_t{1} << j) - 1;
        w += j - std::popcount(occ & below);
        occ |= std::uint64_t{1} << j;
    }
    return w;
}

int orbit_size_log2_formula(Monomial f) { return degree(f) + partition_weight(f); }

OrbitSummary orbit_serial(const Poly& seed, const OrbitOptions& opt) {
    check_group_domain(seed.m);
    std::vector<std::uint32_t> codes;
    bool restricted = opt.fix_head.has_value();
    if (restricted) codes = head_stabilizer(*opt.fix_head, seed.m);
    const std::uint64_t total = restricted ? codes.size() : (std::uint64_t{1} << lta_param_bits(seed.m));

    KeySet set;
    set.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(total, 1u << 20)));
    std::vector<std::uint64_t> out, acc, scratch;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint32_t code = restricted ? codes[static_cast<std::size_t>(idx)] : static_cast<std::uint32_t>(idx);
        LtaElement g = lta_element_from_code(seed.m, code);
        set.insert(apply_key(g, seed.terms, out, acc, scratch));
    }
    return summarize(std::move(set), opt.keep_elements);
}

OrbitSummary orbit(const Poly& seed, const OrbitOptions& opt) {
    if (!opt.parallel) return orbit_serial(seed, opt);
    check_group_domain(seed.m);
    std::vector<std::uint32_t> codes;
    bool restricted = opt.fix_head.has_value();
    if (restricted) codes = head_stabilizer(*opt.fix_head, seed.m);
    const std::uint64_t total = restricted ? codes.size() : (std::uint64_t{1} << lta_param_bits(seed.m));

    KeySet set;
#ifdef _OPENMP
#pragma omp parallel
    {
        KeySet local;
        std::vector<std::uint64_t> out, acc, scratch;
#pragma omp for schedule(static) nowait
        for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(total); ++idx) {
            std::uint32_t code = restricted ? codes[static_cast<std::size_t>(idx)] : static_cast<std::uint32_t>(idx);
            LtaElement g = lta_element_from_code(seed.m, code);
            local.insert(apply_key(g, seed.terms, out, acc, scratch));
        }
#pragma omp critical(mono_orbit_merge)
        set.merge(local);
    }
#else
    return orbit_serial(seed, opt);
#endif
    return summarize(std::move(set), opt.keep_elements);
}

std::vector<std::uint32_t> head_stabilizer(Monomial h, int m) {
    check_group_domain(m);
    if (max_index(h) >= m) throw std::invalid_argument("head uses variable >= m");
    const std::uint64_t total = std::uint64_t{1} << lta_param_bits(m);
    std::vector<std::uint32_t> codes;
    PolyKey target{h.mask};
    std::vector<std::uint64_t> out, acc, scratch;
    for (std::uint64_t code = 0; code < total; ++code) {
        LtaElement g = lta_element_from_code(m, static_cast<std::uint32_t>(code));
        if (apply_key(g, target, out, acc, scratch) == target) codes.push_back(static_cast<std::uint32_t>(code));
    }
    return codes;
}

CollisionReport collision_exponent(Monomial u_i, Monomial u_j, Monomial h, int m) {
    OrbitOptions opt;
    opt.fix_head = (h.mask == 0) ? std::nullopt : std::optional<Monomial>(h);
    OrbitSummary oi = orbit(make_poly(m, {u_i.mask}), opt);
    OrbitSummary oj = orbit(make_poly(m, {u_j.mask}), opt);

    KeySet sums;
    sums.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(
        static_cast<std::uint64_t>(oi.elements.size()) * oj.elements.size(), std::uint64_t{1} << 20)));
    for (const PolyKey& a : oi.elements) {
        Poly pa{m, a};
        for (const PolyKey& b : oj.elements) sums.insert(add(pa, Poly{m, b}).terms);
    }

    CollisionReport rep;
    rep.orbit_i = static_cast<std::uint64_t>(oi.size);
    rep.orbit_j = static_cast<std::uint64_t>(oj.size);
    rep.minkowski = sums.size();
    std::uint64_t product = rep.orbit_i * rep.orbit_j;
    if (rep.minkowski != 0 && product % rep.minkowski == 0) {
        std::uint64_t ratio = product / rep.minkowski;
        if (std::has_single_bit(ratio)) {
            rep.power_of_two = true;
            rep.alpha = std::countr_zero(ratio);
        }
    }
    return rep;
}

KernelFreedom kernel_freedom(Monomial h, const std::vector<Monomial>& tails, int m) {
    if (tails.empty()) throw std::invalid_argument("kernel_freedom needs at least one tail");
    std::vector<std::uint32_t> gh = (h.mask == 0)
        ? std::vector<std::uint32_t>{}
        : head_stabilizer(h, m);
    check_group_domain(m);
    std::uint64_t gh_size;
    std::vector<PolyKey> fixed;  // h * u_j, the polynomials the stabilizer must fix pointwise
    for (Monomial u : tails) {
        if (u.mask & h.mask) throw std::invalid_argument("tail shares a variable with the head");
        fixed.push_back(PolyKey{u.mask | h.mask});
    }

    std::uint64_t joint = 0;
    std::vector<std::uint64_t> out, acc, scratch;
    auto fixes_all = [&](std::uint32_t code) {
        LtaElement g = lta_element_from_code(m, code);
        for (const PolyKey& t : fixed)
            if (apply_key(g, t, out, acc, scratch) != t) return false;
        return true;
    };
    if (h.mask == 0) {
        gh_size = std::uint64_t{1} << lta_param_bits(m);
        for (std::uint64_t code = 0; code < gh_size; ++code)
            if (fixes_all(static_cast<std::uint32_t>(code))) ++joint;
    } else {
        gh_size = gh.size();
        for (std::uint32_t code : gh)
            if (fixes_all(code)) ++joint;
    }

    if (joint == 0 || gh_size % joint != 0 || !std::has_single_bit(gh_size / joint))
        throw std::logic_error("joint stabilizer index is not a power of two");
    KernelFreedom kf;
    kf.g_h_size = gh_size;
    kf.joint_stabilizer = joint;
    kf.beta = std::countr_zero(gh_size / joint);
    int raw = 0;
    for (Monomial u : tails) raw += degree(u) + partition_weight(u);
    kf.beta_mix = kf.beta - raw;
    return kf;
}

}  // namespace mono
