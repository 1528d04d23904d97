#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twistlab/scalar.hpp"

using namespace twistlab;

TEST_CASE("rationals parse and print exactly") {
    CHECK(to_string(parse_scalar<Rational>("-3/6")) == "-1/2");
    CHECK(to_string(parse_scalar<Rational>("7")) == "7");
    CHECK(is_zero(parse_scalar<Rational>("0/5")));
    CHECK(inverse(Rational(-2, 3)) == Rational(-3, 2));
    CHECK_THROWS_AS(parse_scalar<Rational>("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar<Rational>("abc"), std::invalid_argument);
}

TEST_CASE("prime field arithmetic") {
    ModP::set_modulus(101);
    ModP a(-1), b(50);
    CHECK(a.value() == 100);
    CHECK((a + ModP(1)).value() == 0);
    CHECK((b * ModP(2)).value() == 100);
    for (int x = 1; x < 101; ++x)
        CHECK((ModP(x) * inverse(ModP(x))).value() == 1);
    CHECK(to_string(parse_scalar<ModP>("-3")) == "98");
    CHECK(field_name<ModP>() == "F_101");
    ModP::set_modulus(32003);
}

TEST_CASE("modulus must be prime") {
    CHECK_THROWS_AS(ModP::set_modulus(100), std::invalid_argument);
    CHECK_THROWS_AS(ModP::set_modulus(1), std::invalid_argument);
    CHECK(is_prime(32003));
    CHECK_FALSE(is_prime(32001));
    CHECK(ModP::modulus() == 32003);
}

TEST_CASE("zero has no inverse") {
    CHECK_THROWS(inverse(ModP(0)));
}
