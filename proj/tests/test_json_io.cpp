#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "mono/code_model.hpp"
#include "mono/enumerators.hpp"
#include "mono/json_io.hpp"
#include "mono/oracle.hpp"
#include "mono/templates.hpp"
#include "mono/weight_engine.hpp"

using namespace mono;

TEST_CASE("dyadic values serialize with exact numerator and rendering") {
    Json j = to_json(Dyadic(37, 4));
    CHECK(j.dump() == R"({"num":"37","k":4,"value":"37/16"})");
    Json neg = to_json(Dyadic(-3, 3));
    CHECK(neg["num"] == "-3");
    CHECK(neg["value"] == "-3/8");
}

TEST_CASE("dyadic weight digits are expanded into a dense bit table") {
    DyadicWeight w = dyadic_decompose(Dyadic(37, 4));
    Json j = to_json(w);
    CHECK(j.dump() == R"({"N":"37","k":4,"digits":[[0,1],[1,0],[2,1],[3,0],[4,0],[5,1]]})");

    DyadicWeight zero = dyadic_decompose(Dyadic(0));
    CHECK(to_json(zero)["digits"] == Json::array());
}

TEST_CASE("sigma coefficients serialize by scale") {
    ResidualFamily fam = ResidualFamily::make(
        Monomial{0},
        {parse_monomial("x0*x1*x2"), parse_monomial("x1*x3*x4"), parse_monomial("x2*x3*x5")}, 6);
    Json j = to_json(sigma(fam));
    CHECK(j.dump() == R"({"sigma":"2","coefficients":[[0,3],[1,-2]]})");
}

TEST_CASE("weight distributions render as json and csv") {
    WeightDistribution d = full_weight_distribution(reed_muller(1, 3));
    Json j = to_json(d);
    CHECK(j.dump() ==
          R"({"m":3,"dimension":4,"distribution":[)"
          R"({"weight":"0","count":"1"},{"weight":"4","count":"14"},{"weight":"8","count":"1"}]})");
    CHECK(to_csv(d) == "weight,count\n0,1\n4,14\n8,1\n");
}

TEST_CASE("enumeration reports carry seeds and optional verification") {
    DecreasingSet rm24 = reed_muller(2, 4);
    EnumerationReport rep = count_disjoint_k_sum(rm24, 2, 1);
    Json j = to_json(rep);
    CHECK(j["weight"] == "4");
    CHECK(j["count"] == "140");
    CHECK(j["incomplete"] == false);
    CHECK(!j.contains("verified"));
    REQUIRE(j["seeds"].size() == 6);
    for (const Json& seed : j["seeds"]) {
        CHECK(seed["kind"] == "disjoint_tuple");
        CHECK(seed["h"] == "1");
        CHECK(seed["terms"].size() == 1);
        CHECK(!seed.contains("j"));
    }
    CHECK(to_csv(rep) == "weight,count\n4,140\n");

    attach_oracle_comparison(rep, rm24);
    Json verified = to_json(rep)["verified"];
    CHECK(verified.dump() == R"({"oracle_count":"140","equal":true,"exceeds":false})");

    EnumerationReport nested = count_nested_degree_drop(rm24, 2);
    Json nj = to_json(nested);
    for (const Json& seed : nj["seeds"]) {
        CHECK(seed["kind"] == "nested_degree_drop");
        CHECK(seed.contains("j"));
    }
}

TEST_CASE("template instances serialize their prediction") {
    TemplateInstance inst = complementary_flip(parse_monomial("x0*x1"), 0, parse_monomial("x2"), 4);
    Json j = to_json(inst);
    CHECK(j["kind"] == "complementary_flip");
    CHECK(j["m"] == 4);
    CHECK(j["r"] == 2);
    CHECK(j["poly"] == to_string(inst.poly));
    CHECK(j["sigma"] == "2");
    CHECK(j["weight"] == "8");
}

TEST_CASE("orbit decompositions serialize pair diagnostics") {
    MasterOrbit mo = master_orbit_size(parse_monomial("1"), parse_poly("x0*x2 + x1*x3", 4), 4);
    Json j = to_json(mo);
    CHECK(j["alpha"] == 1);
    CHECK(j["alpha_all_power_of_two"] == true);
    CHECK(j["full_orbit"] == "128");
    REQUIRE(j["pairs"].size() == 1);
    CHECK(j["pairs"][0]["power_of_two"] == true);
    CHECK(j["pairs"][0]["alpha"] == 1);
}

TEST_CASE("code specs parse reed-muller and explicit member lists") {
    DecreasingSet rm = parse_code_spec_text(R"({"rm": [2, 4]})");
    CHECK(rm.members == reed_muller(2, 4).members);

    DecreasingSet listed = parse_code_spec_text(R"({"m": 3, "monomials": ["1", "x0", "x1"]})");
    CHECK(listed.dimension() == 3);

    // non-closed lists are rejected unless closure is requested
    CHECK_THROWS_AS(parse_code_spec_text(R"({"m": 4, "monomials": ["x1*x3"]})"),
                    std::invalid_argument);
    DecreasingSet closed = parse_code_spec_text(R"({"m": 4, "monomials": ["x1*x3"]})", true);
    CHECK(closed.dimension() == 10);

    CHECK_THROWS_AS(parse_code_spec_text(R"({"rm": [2]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_code_spec_text(R"({"m": 3})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_code_spec_text(R"({"monomials": ["x0"]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_code_spec_text(R"({"m": 2, "monomials": ["1", "x5"]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_code_spec_text(R"([1, 2])"), std::invalid_argument);
}

TEST_CASE("template specs parse every kind") {
    TemplateInstance dks = parse_template_spec_text(
        R"({"kind": "disjoint_k_sum", "m": 4, "params": {"terms": ["x0*x1", "x2*x3"]}})");
    CHECK(dks.kind == TemplateKind::kDisjointKSum);
    CHECK(dks.predicted_weight == 6);

    TemplateInstance drop = parse_template_spec_text(
        R"({"kind": "rank_ell_degree_drop", "m": 4, "params": {"terms": ["x0*x1"], "g": "x2"}})");
    CHECK(drop.kind == TemplateKind::kRankEllDegreeDrop);
    CHECK(drop.predicted_weight == 8);

    TemplateInstance flip = parse_template_spec_text(
        R"({"kind": "complementary_flip", "m": 4, "params": {"f": "x0*x1", "j": 0, "g": "x2"}})");
    CHECK(flip.kind == TemplateKind::kComplementaryFlip);
    CHECK(flip.predicted_weight == 8);

    TemplateInstance qb = parse_template_spec_text(
        R"({"kind": "shared_3term_b", "m": 6, "params": {"h": "1"}})");
    CHECK(qb.kind == TemplateKind::kShared3TermB);
    CHECK(qb.poly == shared_3term(Monomial{0}, SharedKernelVariant::kB, 6).poly);
    CHECK(qb.predicted_weight == 16);

    TemplateInstance qb_labeled = parse_template_spec_text(
        R"({"kind": "shared_3term_b", "m": 6, "params": {"h": "1", "labels": [0, 1, 2, 3, 4, 5]}})");
    CHECK(qb_labeled.poly == qb.poly);

    TemplateInstance qc = parse_template_spec_text(
        R"({"kind": "shared_3term_c", "m": 7, "params": {"h": "1"}})");
    CHECK(qc.kind == TemplateKind::kShared3TermC);
    CHECK(qc.predicted_weight == 32);

    TemplateInstance nested = parse_template_spec_text(
        R"({"kind": "nested", "m": 5, "params": {"h": "x4", "kernel": "x0*x1 + x0*x2 + x2"}})");
    CHECK(nested.kind == TemplateKind::kNested);
    CHECK(nested.predicted_weight == 8);

    CHECK_THROWS_AS(parse_template_spec_text(R"({"kind": "bogus", "m": 4, "params": {}})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_template_spec_text(R"({"kind": "nested", "m": 5, "params": {}})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        parse_template_spec_text(R"({"kind": "disjoint_k_sum", "m": 4, "params": {"terms": ["x7"]}})"),
        std::invalid_argument);
}
