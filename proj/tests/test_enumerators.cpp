#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "mono/code_model.hpp"
#include "mono/enumerators.hpp"
#include "mono/eval.hpp"
#include "mono/lta.hpp"
#include "mono/oracle.hpp"

using namespace mono;

namespace {

Poly seed_codeword(int m, const SeedDescriptor& s) {
    Poly p = poly_from_monomials(m, s.S);
    if (s.j) p = add(p, make_poly(m, {s.h.mask | (std::uint64_t{1} << *s.j)}));
    return p;
}

}  // namespace

TEST_CASE("disjoint tuple enumeration at small scale") {
    DecreasingSet rm24 = reed_muller(2, 4);
    CHECK(enumerate_disjoint_tuples(rm24, 2, 1).size() == 6);
    auto pairs = enumerate_disjoint_tuples(rm24, 2, 2);
    CHECK(pairs.size() == 3);
    for (const auto& t : pairs) {
        REQUIRE(t.size() == 2);
        CHECK((t[0].mask & t[1].mask) == 0);
    }
    CHECK(enumerate_disjoint_tuples(rm24, 2, 3).empty());  // 3*2 > 4: nothing fits
    CHECK_THROWS_AS(count_disjoint_k_sum(rm24, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_disjoint_tuples(rm24, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_disjoint_tuples(rm24, 2, 0), std::invalid_argument);
}

TEST_CASE("minimum-weight counts match the exhaustive walk") {
    struct Fixture {
        DecreasingSet I;
        int r;
        BigInt count;
    };
    std::vector<Fixture> fx;
    fx.push_back({reed_muller(1, 3), 1, 14});
    fx.push_back({reed_muller(2, 4), 2, 140});
    fx.push_back({reed_muller(2, 5), 2, 620});
    fx.push_back({reed_muller(3, 5), 3, 1240});
    fx.push_back({decreasing_closure(4, {parse_monomial("x1*x3")}), 2, 76});
    for (const auto& f : fx) {
        EnumerationReport rep = count_disjoint_k_sum(f.I, f.r, 1);
        CHECK(rep.total_count == f.count);
        CHECK(!rep.incomplete);
        BigInt min_wt = BigInt(1) << (f.I.m - f.r);
        CHECK(rep.weight == min_wt);
        // each seed is one monomial orbit
        BigInt sum = 0;
        for (const SeedDescriptor& s : rep.seeds) {
            REQUIRE(s.S.size() == 1);
            CHECK(s.exponent == orbit_size_log2_formula(s.S[0]));
            sum += BigInt(1) << s.exponent;
        }
        CHECK(sum == rep.total_count);
    }

    // oracle comparison is attachable wherever the dimension cap allows
    EnumerationReport rep = count_disjoint_k_sum(reed_muller(2, 4), 2, 1);
    attach_oracle_comparison(rep, reed_muller(2, 4));
    REQUIRE(rep.verified.has_value());
    CHECK(rep.verified->oracle_count == 140);
    CHECK(rep.verified->equal);
    CHECK(!rep.verified->exceeds);
}

TEST_CASE("two disjoint quadratics: corrected, raw, and ordered counts") {
    DecreasingSet rm24 = reed_muller(2, 4);

    EnumerationReport corrected = count_disjoint_k_sum(rm24, 2, 2);
    CHECK(corrected.total_count == 448);
    std::multiset<int> exps;
    for (const SeedDescriptor& s : corrected.seeds) exps.insert(s.exponent);
    CHECK(exps == std::multiset<int>{6, 7, 8});

    attach_oracle_comparison(corrected, rm24);
    REQUIRE(corrected.verified.has_value());
    CHECK(corrected.verified->oracle_count == 448);
    CHECK(corrected.verified->equal);

    // without the collision correction the same seeds overcount
    DisjointCountOptions raw;
    raw.collision_corrected = false;
    EnumerationReport uncorrected = count_disjoint_k_sum(rm24, 2, 2, raw);
    CHECK(uncorrected.total_count == 768);
    attach_oracle_comparison(uncorrected, rm24);
    REQUIRE(uncorrected.verified.has_value());
    CHECK(!uncorrected.verified->equal);
    CHECK(uncorrected.verified->exceeds);

    DisjointCountOptions ordered;
    ordered.ordered = true;
    EnumerationReport perm = count_disjoint_k_sum(rm24, 2, 2, ordered);
    BigInt doubled = corrected.total_count * 2;  // k! = 2
    CHECK(perm.total_count == doubled);
    CHECK(perm.total_count == 896);
}

TEST_CASE("collision exponents beyond the explicit cap flag the report") {
    DecreasingSet rm27 = reed_muller(2, 7);
    EnumerationReport pairs = count_disjoint_k_sum(rm27, 2, 2);
    CHECK(pairs.incomplete);  // pairs reaching x6 need an ambient group on 7 variables
    CHECK(pairs.total_count > 0);

    EnumerationReport singles = count_disjoint_k_sum(rm27, 2, 1);
    CHECK(!singles.incomplete);  // no pairs, no collisions
}

TEST_CASE("degree-drop seed totals match the exhaustive walk") {
    struct Fixture {
        DecreasingSet I;
        int r;
        BigInt count;
    };
    std::vector<Fixture> fx;
    fx.push_back({reed_muller(2, 4), 2, 870});
    fx.push_back({reed_muller(2, 5), 2, 36518});
    fx.push_back({reed_muller(3, 4), 3, 1820});
    fx.push_back({decreasing_closure(4, {parse_monomial("x1*x3")}), 2, 486});
    for (const auto& f : fx) {
        EnumerationReport rep = count_nested_degree_drop(f.I, f.r);
        CHECK(rep.total_count == f.count);
        CHECK(!rep.incomplete);
        BigInt twice_min = BigInt(1) << (f.I.m - f.r + 1);
        CHECK(rep.weight == twice_min);
        attach_oracle_comparison(rep, f.I);
        REQUIRE(rep.verified.has_value());
        CHECK(rep.verified->oracle_count == f.count);
        CHECK(rep.verified->equal);
    }

    // beyond the oracle cap the symbolic total still evaluates
    EnumerationReport big = count_nested_degree_drop(reed_muller(3, 5), 3);
    CHECK(big.total_count == 52700);
    CHECK(!big.incomplete);
    CHECK_THROWS_AS(attach_oracle_comparison(big, reed_muller(3, 5)), std::domain_error);
}

TEST_CASE("seed layout of the order-2 length-16 degree-drop class") {
    EnumerationReport rep = count_nested_degree_drop(reed_muller(2, 4), 2);
    REQUIRE(rep.seeds.size() == 16);

    BigInt bare = 0, extended = 0;
    int bare_seeds = 0;
    for (const SeedDescriptor& s : rep.seeds) {
        CHECK(s.kind == SeedDescriptor::Kind::kNestedDegreeDrop);
        REQUIRE(s.j.has_value());
        BigInt size = BigInt(1) << s.exponent;
        if (s.S.empty()) {
            ++bare_seeds;
            bare += size;
        } else {
            extended += size;
        }
        for (const Monomial& f : s.S) CHECK(divides(s.h, f));
    }
    CHECK(bare_seeds == 4);  // one per degree-1 member
    CHECK(bare == 30);
    CHECK(extended == 840);
}

TEST_CASE("every degree-drop seed owns a full orbit and the orbits tile the class") {
    DecreasingSet rm24 = reed_muller(2, 4);
    EnumerationReport rep = count_nested_degree_drop(rm24, 2);

    std::set<PolyKey> all;
    BigInt sum = 0;
    for (const SeedDescriptor& s : rep.seeds) {
        Poly p = seed_codeword(4, s);
        CHECK(contains_poly(rm24, p));
        CHECK(weight(p) == 8);
        OrbitSummary orb = orbit(p);
        BigInt predicted = BigInt(1) << s.exponent;
        CHECK(orb.size == predicted);
        sum += orb.size;
        for (const PolyKey& key : orb.elements) all.insert(key);
    }
    CHECK(sum == rep.total_count);
    CHECK(BigInt(all.size()) == rep.total_count);  // pairwise disjoint

    for (const PolyKey& key : all) {
        Poly p = make_poly(4, key);
        CHECK(weight(p) == 8);
    }
}

TEST_CASE("two-part orbit decomposition on canonical splits") {
    // nontrivial head, tails of mixed degree
    MasterOrbit a = master_orbit_size(parse_monomial("x2*x3"), parse_poly("x0*x1 + x4", 5), 5);
    CHECK(a.head_exponent == 6);
    CHECK(a.beta == 5);
    CHECK(a.beta_mix == -2);
    CHECK(a.alpha == 2);
    CHECK(a.alpha_all_power_of_two);
    CHECK(a.stabilizer_orbit == 8);
    CHECK(a.full_orbit == 512);
    BigInt a_stab = BigInt(1) << a.predicted_stabilizer_exponent();
    BigInt a_full = BigInt(1) << a.predicted_full_exponent();
    CHECK(a.stabilizer_orbit == a_stab);
    CHECK(a.full_orbit == a_full);

    MasterOrbit b = master_orbit_size(parse_monomial("x4"), parse_poly("x0*x1 + x2*x3", 5), 5);
    CHECK(b.head_exponent == 5);
    CHECK(b.beta == 8);
    CHECK(b.beta_mix == 0);
    CHECK(b.alpha == 0);
    CHECK(b.stabilizer_orbit == 256);
    CHECK(b.full_orbit == 8192);
    BigInt b_full = BigInt(1) << b.predicted_full_exponent();
    CHECK(b.full_orbit == b_full);

    // trivial head: the stabilizer is the whole group
    MasterOrbit c = master_orbit_size(parse_monomial("1"), parse_poly("x0*x1 + x2*x3", 4), 4);
    CHECK(c.head_exponent == 0);
    CHECK(c.alpha == 0);
    CHECK(c.stabilizer_orbit == 256);
    CHECK(c.full_orbit == 256);

    MasterOrbit d = master_orbit_size(parse_monomial("1"), parse_poly("x0*x2 + x1*x3", 4), 4);
    CHECK(d.alpha == 1);
    CHECK(d.full_orbit == 128);
    BigInt d_full = BigInt(1) << d.predicted_full_exponent();
    CHECK(d.full_orbit == d_full);
}

TEST_CASE("orbit decomposition failure modes stay observable") {
    // overlapping tails: the Minkowski quotient is not a power of two
    MasterOrbit chain = master_orbit_size(parse_monomial("1"), parse_poly("x0*x1 + x1*x2", 4), 4);
    CHECK(!chain.alpha_all_power_of_two);
    REQUIRE(chain.pairs.size() == 1);
    CHECK(!chain.pairs[0].power_of_two);

    // non-canonical split: part of the true head left in the kernel
    MasterOrbit skew = master_orbit_size(parse_monomial("x2"), parse_poly("x0*x1", 3), 3);
    CHECK(skew.full_orbit == 8);  // the orbit of x0*x1*x2 itself
    BigInt skew_predicted = BigInt(1) << skew.predicted_full_exponent();
    CHECK(skew_predicted == 32);
    CHECK(skew.full_orbit != skew_predicted);

    CHECK_THROWS_AS(master_orbit_size(parse_monomial("x0"), make_poly(3, {}), 3),
                    std::invalid_argument);
}

TEST_CASE("degree-drop counting validates its inputs") {
    DecreasingSet rm24 = reed_muller(2, 4);
    CHECK_THROWS_AS(count_nested_degree_drop(rm24, 1), std::invalid_argument);
    CHECK_THROWS_AS(count_nested_degree_drop(rm24, 5), std::invalid_argument);
}
