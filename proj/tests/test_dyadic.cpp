#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "mono/dyadic.hpp"

using namespace mono;

TEST_CASE("construction normalizes to odd numerator or zero") {
    CHECK(Dyadic(BigInt(37), 4).num == 37);
    CHECK(Dyadic(BigInt(37), 4).k == 4);
    CHECK(Dyadic(BigInt(74), 5) == Dyadic(BigInt(37), 4));
    CHECK(Dyadic(BigInt(0), 9) == Dyadic());
    CHECK(Dyadic(BigInt(0), 9).k == 0);
    CHECK(Dyadic(BigInt(8), 3) == Dyadic(1));
    CHECK(Dyadic(-6).num == -6);  // integers keep k = 0, even numerator allowed
    CHECK(Dyadic(-6).k == 0);
    CHECK_THROWS_AS(Dyadic(BigInt(3), -1), std::invalid_argument);
}

TEST_CASE("rendering") {
    CHECK(Dyadic(BigInt(37), 4).str() == "37/16");
    CHECK(Dyadic().str() == "0");
    CHECK(Dyadic(5).str() == "5");
    CHECK(Dyadic(BigInt(-3), 3).str() == "-3/8");
    CHECK(Dyadic::pow2(-3).str() == "1/8");
    CHECK(Dyadic::pow2(4).str() == "16");
}

TEST_CASE("field operations at mixed scales") {
    Dyadic half = Dyadic::pow2(-1);
    CHECK(half + half == Dyadic(1));
    CHECK(Dyadic(2) - Dyadic(BigInt(1), 4) == Dyadic(BigInt(31), 4));
    CHECK(half * Dyadic(BigInt(37), 4) == Dyadic(BigInt(37), 5));
    CHECK(-Dyadic(BigInt(3), 1) == Dyadic(BigInt(-3), 1));
    CHECK(Dyadic(BigInt(37), 4) == Dyadic(2) + Dyadic(BigInt(5), 4));
    CHECK(Dyadic(1).times_pow2(-7) == Dyadic::pow2(-7));
    CHECK(dyadic_pow(Dyadic(BigInt(3), 2), 3) == Dyadic(BigInt(27), 6));
    CHECK(dyadic_pow(Dyadic(BigInt(3), 2), 0) == Dyadic(1));
}

TEST_CASE("ordering") {
    CHECK(Dyadic(BigInt(37), 4) < Dyadic(BigInt(5), 1));  // 2.3125 < 2.5
    CHECK(Dyadic(2) <= Dyadic(BigInt(37), 4));
    CHECK(Dyadic(BigInt(-1), 2) < Dyadic());
    CHECK(Dyadic(BigInt(7), 3) > Dyadic(BigInt(3), 2));
    CHECK(!(Dyadic(BigInt(7), 3) < Dyadic(BigInt(7), 3)));
}

TEST_CASE("integrality certification") {
    CHECK(Dyadic(6).is_integer());
    CHECK(Dyadic(6).to_integer() == 6);
    CHECK(Dyadic().to_integer() == 0);
    CHECK(!Dyadic(BigInt(37), 4).is_integer());
    CHECK_THROWS_AS(Dyadic(BigInt(37), 4).to_integer(), std::logic_error);
    CHECK(Dyadic(BigInt(37), 4).times_pow2(4).to_integer() == 37);
}

TEST_CASE("exactness survives deep scaling") {
    // 1 - (1 - 2^-200)  reproduces 2^-200 exactly
    Dyadic tiny = Dyadic::pow2(-200);
    CHECK(Dyadic(1) - (Dyadic(1) - tiny) == tiny);
    CHECK((tiny * tiny) == Dyadic::pow2(-400));
    CHECK((Dyadic::pow2(300) + Dyadic(1)) - Dyadic::pow2(300) == Dyadic(1));
}
