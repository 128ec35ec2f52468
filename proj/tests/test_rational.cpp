#include "doctest.h"

#include "error.hpp"
#include "rational.hpp"

using namespace tablecast;

TEST_CASE("factorial and binomial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(20) == BigInt("2432902008176640000"));
    CHECK(factorial(25) == BigInt("15511210043330985984000000"));
    CHECK(binomial(20, 10) == 184756);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(60, 30) == BigInt("118264581564861424"));
}

TEST_CASE("fraction strings are in lowest terms") {
    CHECK(to_fraction_string(Rational(266, 40)) == "133/20");
    CHECK(to_fraction_string(Rational(10)) == "10");
    CHECK(to_fraction_string(Rational(-3, 6)) == "-1/2");
}

TEST_CASE("decimal rendering") {
    CHECK(to_decimal_string(Rational(133, 20)) == "6.65");
    CHECK(to_decimal_string(Rational(14, 5)) == "2.8");
    CHECK(to_decimal_string(Rational(10)) == "10");
    CHECK(to_decimal_string(Rational(0)) == "0");
    CHECK(to_decimal_string(Rational(1, 3)) == "0.333333333333");
    CHECK(to_decimal_string(Rational(2, 3)) == "0.666666666667");
    CHECK(to_decimal_string(Rational(-7, 4)) == "-1.75");
    CHECK(to_decimal_string(Rational(1, 2000)) == "0.0005");
    CHECK(to_decimal_string(Rational(1, 184756), 6) == "5.41254e-06");
    CHECK(to_decimal_string(Rational(BigInt(1), factorial(20)), 6) == "4.11032e-19");
    CHECK(to_decimal_string(Rational(999999, 1000000), 3) == "1");
    CHECK(to_decimal_string(Rational(factorial(20)), 6) == "2.4329e+18");
    CHECK_THROWS_AS(to_decimal_string(Rational(1), 0), Error);
}
