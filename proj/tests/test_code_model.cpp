#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "mono/code_model.hpp"
#include "mono/eval.hpp"

using namespace mono;

TEST_CASE("the partial order pairs largest indices first") {
    auto leq = [](const char* a, const char* b) {
        return leq_decreasing(parse_monomial(a), parse_monomial(b));
    };
    CHECK(leq("1", "x0"));
    CHECK(leq("x0", "x0"));
    CHECK(leq("x1*x3", "x2*x3"));
    CHECK(leq("x0*x1", "x1*x3"));
    CHECK(leq("x0*x2", "x1*x3"));
    CHECK(!leq("x2", "x0*x1"));       // degree fits but the index does not
    CHECK(!leq("x0*x1*x2", "x3"));    // degree exceeds
    CHECK(!leq("x2*x3", "x1*x3"));
    CHECK(leq("x0*x2*x4", "x1*x3*x5"));
    CHECK(!leq("x1*x3*x5", "x0*x2*x4"));
}

TEST_CASE("downward closure of a single monomial") {
    DecreasingSet s = decreasing_closure(4, {parse_monomial("x1*x3")});
    CHECK(s.dimension() == 10);
    for (const char* f : {"1", "x0", "x1", "x2", "x3", "x0*x1", "x0*x2", "x0*x3", "x1*x2", "x1*x3"})
        CHECK(s.contains(parse_monomial(f)));
    CHECK(!s.contains(parse_monomial("x2*x3")));
    CHECK(!s.contains(parse_monomial("x0*x1*x2")));

    // closure is idempotent
    std::vector<Monomial> members;
    for (std::uint64_t t : s.members) members.push_back(Monomial{t});
    DecreasingSet again = decreasing_closure(4, members);
    CHECK(again.members == s.members);
    CHECK(is_decreasing(4, members));
}

TEST_CASE("membership validation rejects holes") {
    std::vector<Monomial> holey = {parse_monomial("1"), parse_monomial("x1")};
    CHECK(!is_decreasing(3, holey));  // x0 is missing below x1
    CHECK_THROWS_AS(make_decreasing_set(3, holey), std::invalid_argument);
    DecreasingSet fixed = decreasing_closure(3, holey);
    CHECK(fixed.dimension() == 3);

    CHECK(is_decreasing(3, {}));
    CHECK(make_decreasing_set(3, {}).dimension() == 0);
}

TEST_CASE("full-degree sets") {
    DecreasingSet rm = reed_muller(2, 4);
    CHECK(rm.m == 4);
    CHECK(rm.dimension() == 11);  // 1 + 4 + 6
    CHECK(r_plus(rm) == 2);
    CHECK(min_distance(rm) == 4);
    CHECK(members_of_degree(rm, 2).size() == 6);
    CHECK(members_of_degree(rm, 3).empty());

    CHECK(reed_muller(0, 5).dimension() == 1);
    CHECK(reed_muller(5, 5).dimension() == 32);
    CHECK(r_plus(make_decreasing_set(3, {})) == -1);
    CHECK_THROWS_AS(min_distance(make_decreasing_set(3, {})), std::domain_error);
    CHECK_THROWS_AS(reed_muller(3, 2), std::invalid_argument);

    // large ambient uses the per-degree walk; binomial sums still hold
    CHECK(reed_muller(2, 26).dimension() == 1 + 26 + 26 * 25 / 2);
}

TEST_CASE("span membership") {
    DecreasingSet rm = reed_muller(1, 3);
    CHECK(contains_poly(rm, parse_poly("x0 + x2 + 1", 3)));
    CHECK(!contains_poly(rm, parse_poly("x0*x1", 3)));
    CHECK(contains_poly(rm, make_poly(3, {})));
}

TEST_CASE("generator matrix rows, order, and rank") {
    DecreasingSet rm = reed_muller(1, 2);
    CHECK(ordered_members(rm) == std::vector<std::uint64_t>{0b00, 0b01, 0b10});
    CHECK(generator_matrix_hex(rm) == std::vector<std::string>{"f", "a", "c"});
    CHECK(generator_matrix_hex(reed_muller(1, 3)) ==
          std::vector<std::string>{"ff", "aa", "cc", "0f"});
    CHECK(generator_matrix_hex(reed_muller(1, 1)) == std::vector<std::string>{"3", "2"});

    // rows are independent for every decreasing set
    for (const DecreasingSet& I :
         {reed_muller(2, 4), reed_muller(3, 5), decreasing_closure(4, {parse_monomial("x1*x3")})}) {
        std::vector<EvalVector> rows = generator_matrix(I);
        CHECK(rows.size() == I.members.size());
        CHECK(gf2_rank(rows) == int(I.members.size()));
    }
}

TEST_CASE("rank drops on dependent rows") {
    std::vector<EvalVector> rows = generator_matrix(reed_muller(1, 3));
    EvalVector sum = xor_vec(rows[0], rows[1]);
    rows.push_back(sum);
    CHECK(gf2_rank(rows) == 4);
    rows.push_back(evaluate(make_poly(3, {})));
    CHECK(gf2_rank(rows) == 4);
}
