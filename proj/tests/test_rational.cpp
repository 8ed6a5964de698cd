#include <doctest.h>

#include "ahg/rational.hpp"

using namespace ahg;

TEST_CASE("rationals stay in lowest terms with positive denominator") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(1, -2) == Rat(-1, 2));
    CHECK(Rat(-4, -6) == Rat(2, 3));
    CHECK(Rat(0, 7).to_string() == "0");
    CHECK(Rat(0, 7).den() == 1);
    CHECK(Rat(5, 1).to_string() == "5");
    CHECK(Rat(-5, 4).to_string() == "-5/4");
    CHECK(Rat(3, 2).den() == 2);
}

TEST_CASE("rational arithmetic and comparisons") {
    Rat a(1, 2), b(1, 3);
    CHECK(a + b == Rat(5, 6));
    CHECK(a - b == Rat(1, 6));
    CHECK(a * b == Rat(1, 6));
    CHECK(a / b == Rat(3, 2));
    CHECK(-a == Rat(-1, 2));
    CHECK(a.inverse() == Rat(2));
    CHECK(a < Rat(2, 3));
    CHECK(Rat(-7, 3) < Rat(0));
    CHECK(Rat(2, 3).pow(3) == Rat(8, 27));
    CHECK_THROWS_AS(a / Rat(0), Error);
    CHECK_THROWS_AS(Rat(0).inverse(), Error);
}

TEST_CASE("string round trip") {
    for (const char* s : {"0", "1", "-1", "5/4", "-22/7", "123456789123456789123456789/2"}) {
        CHECK(Rat::from_string(s).to_string() == s);
    }
    CHECK(Rat::from_string("4/8") == Rat(1, 2));
    CHECK_THROWS_AS(Rat::from_string(""), ParseError);
    CHECK_THROWS_AS(Rat::from_string("a"), ParseError);
    CHECK_THROWS_AS(Rat::from_string("1/0"), ParseError);
    CHECK_THROWS_AS(Rat::from_string("1/-2"), ParseError);
    CHECK_THROWS_AS(Rat::from_string("1.5"), ParseError);
}

TEST_CASE("factorial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == mpz_class("2432902008176640000"));
}

TEST_CASE("decimal rendering with six significant digits") {
    Rat z(mpz_class("30318066527332447242457"),
          mpz_class("89619251224349337722522492794306560000"));
    CHECK(decimal_string(z, 6) == "3.38299e-16");
    Rat e8(mpz_class("52047189429143224956864"), mpz_class("30318066527332447242457"));
    CHECK(decimal_string(e8, 6) == "1.71671e+00");

    CHECK(decimal_string(Rat(1), 6) == "1.00000e+00");
    CHECK(decimal_string(Rat(-5, 4), 6) == "-1.25000e+00");
    CHECK(decimal_string(Rat(1, 3), 6) == "3.33333e-01");
    CHECK(decimal_string(Rat(2, 3), 6) == "6.66667e-01");
    CHECK(decimal_string(Rat(999999999), 6) == "1.00000e+09");
    CHECK(decimal_string(Rat(0), 6) == "0.00000e+00");
    CHECK(decimal_string(Rat(1, 1000), 3) == "1.00e-03");
}
