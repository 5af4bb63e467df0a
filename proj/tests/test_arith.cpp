#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cmlab/arith.hpp"

using namespace cmlab;

TEST_CASE("primality and factorization") {
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK(next_prime(14) == 17);
    auto f = factor(Integer(360));
    REQUIRE(f.size() == 3);
    CHECK(f[0].first == 2);
    CHECK(f[0].second == 3);
    CHECK(f[2].first == 5);
    CHECK(prime_divisors(-84) == std::vector<i64>{2, 3, 7});
}

TEST_CASE("valuations") {
    CHECK(valuation(i64(162), i64(3)) == 4);
    CHECK(valuation(Rational(9, 250), Integer(5)) == -3);
    CHECK(valuation(Rational(9, 250), Integer(3)) == 2);
}

TEST_CASE("modular helpers") {
    CHECK(mod(-7, 5) == 3);
    CHECK(mod_pow(3, 100, 101) == 1);
    for (i64 a = 1; a < 31; ++a) CHECK(mod(a * mod_inverse(a, 31), 31) == 1);
    CHECK(ipow(3, 5) == 243);
}

TEST_CASE("kronecker agrees with Euler's criterion at odd primes") {
    for (i64 p : {3, 5, 7, 11, 13, 101}) {
        for (i64 a = -60; a <= 60; ++a) {
            i64 e = mod_pow(mod(a, p), (p - 1) / 2, p);
            int expect = mod(a, p) == 0 ? 0 : (e == 1 ? 1 : -1);
            CHECK(kronecker(a, p) == expect);
        }
    }
    // (a|2) is determined by a mod 8
    CHECK(kronecker(-7, 2) == 1);
    CHECK(kronecker(-3, 2) == -1);
    CHECK(kronecker(-4, 2) == 0);
}

TEST_CASE("square roots") {
    CHECK(isqrt(99) == 9);
    CHECK(isqrt(100) == 10);
    CHECK(is_square(Integer(144)));
    CHECK_FALSE(is_square(Integer(-4)));
    CHECK(rational_sqrt(Rational(9, 4)) == Rational(3, 2));
    CHECK_THROWS(rational_sqrt(Rational(2)));
}

TEST_CASE("rendering") {
    Rational r(6, 4);
    r.canonicalize();
    CHECK(to_string(r) == "3/2");
    CHECK(to_string(Rational(5)) == "5");
    CHECK(to_decimal(Rational(1, 3)) == "0.333333333333");
    CHECK(to_decimal(Rational(2, 5)) == "0.4");
    CHECK(to_decimal(Rational(0)) == "0");
}
