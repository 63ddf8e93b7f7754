#include "mono/selftest.hpp"

#include <string>

#include "mono/code_model.hpp"
#include "mono/enumerators.hpp"
#include "mono/eval.hpp"
#include "mono/lta.hpp"
#include "mono/oracle.hpp"
#include "mono/templates.hpp"
#include "mono/weight_engine.hpp"

namespace mono {

namespace {

struct Checker {
    std::ostream& out;
    int failures = 0;

    void operator()(const std::string& name, bool ok) {
        out << (ok ? "ok   " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
    }
};

}  // namespace

int run_selftest(std::ostream& out) {
    Checker check{out};

    Poly p = parse_poly("x0*x1*x2 + x0*x3*x4 + x1*x5 + x2", 6);
    check("evaluation agrees with reference", evaluate(p) == evaluate_reference(p));
    check("monomial weight is 2^(m-deg)", weight(parse_poly("x0*x1*x2", 6)) == 8);
    check("inclusion-exclusion weight matches truth table",
          general_weight(residual_family_of(p)) == BigInt(weight(p)));

    Dyadic s33 = sigma_k(3, 3);
    check("three disjoint cubics: sigma 37/16 and weight 148 at m=9",
          s33 == Dyadic(BigInt(37), 4) && disjoint_k_sum_weight(3, 3, 9) == 148);
    DyadicWeight dw = dyadic_decompose(s33);
    check("dyadic digits of 37/16",
          dw.N == 37 && dw.k == 4 && dw.digits == std::vector<int>{0, 2, 5});

    Poly seed = parse_poly("x0*x1", 3);
    check("orbit size matches the exponent formula",
          orbit(seed).size == BigInt(1) << orbit_size_log2_formula(parse_monomial("x0*x1")));
    {
        bool law = true;
        for (std::uint32_t a : {3u, 17u, 40u, 63u}) {
            for (std::uint32_t b : {5u, 29u, 41u}) {
                LtaElement g = lta_element_from_code(3, a);
                LtaElement h = lta_element_from_code(3, b);
                law = law && apply(lta_compose(g, h), seed) == apply(h, apply(g, seed));
            }
        }
        check("composition acts compatibly", law);
    }

    DecreasingSet rm13 = reed_muller(1, 3);
    WeightDistribution dist = full_weight_distribution(rm13);
    check("first-order length-8 distribution",
          dist.entries == std::map<std::uint64_t, BigInt>{{0, 1}, {4, 14}, {8, 1}});

    TemplateInstance flip =
        complementary_flip(parse_monomial("x0*x1"), 1, parse_monomial("x2"), 4);
    check("flip template weight matches evaluation",
          flip.predicted_weight == BigInt(weight(flip.poly)));

    DecreasingSet rm24 = reed_muller(2, 4);
    check("minimum-weight count at r=2, m=4",
          count_disjoint_k_sum(rm24, 2, 1).total_count == 140);
    check("second-weight count at r=2, m=4",
          count_nested_degree_drop(rm24, 2).total_count == 870);

    out << (check.failures == 0 ? "selftest passed" : "selftest FAILED") << "\n";
    return check.failures == 0 ? 0 : 1;
}

}  // namespace mono
