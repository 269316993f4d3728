#include <doctest.h>

#include "dstokes/findiff.hpp"

using namespace dstokes;

TEST_CASE("backbone identities, instantiated") {
    auto x2 = Polynomial::monomial(2);
    auto x3 = Polynomial::monomial(3);
    auto x4 = Polynomial::monomial(4);
    CHECK(central_difference(1, Rational(1), x2, Rational(3)) == Rational(6));
    CHECK(central_difference(2, Rational(1), x3, Rational(1)) == Rational(6));
    CHECK(central_difference(3, Rational(1), x4, Rational(1, 2)) == Rational(12));
}

TEST_CASE("r-th difference over the half-integer sweep") {
    for (int r = 1; r <= 3; ++r) {
        auto f = Polynomial::monomial(r + 1);
        for (long long k = -21; k <= 21; ++k) {
            Rational x(k, 2);
            CHECK(central_difference(r, Rational(1), f, x) ==
                  Rational(factorial(r + 1)) * x);
        }
    }
}

TEST_CASE("differences annihilate low-degree polynomials") {
    for (int r = 1; r <= 3; ++r)
        for (int deg = 0; deg < r; ++deg) {
            Polynomial f;
            // a dense polynomial with varied coefficients
            for (int c = 0; c <= deg; ++c)
                f.coeffs.push_back(Rational(2 * c + 1, c + 2));
            for (long long k = -8; k <= 8; ++k)
                CHECK(central_difference(r, Rational(1), f, Rational(k, 2)) == Rational(0));
        }
}

TEST_CASE("normalization coefficients") {
    CHECK(normalization(1, 1) == Rational(1, 2));
    CHECK(normalization(2, 1) == Rational(1, 6));
    CHECK(normalization(1, 3) == Rational(1, 6));
    CHECK(normalization(2, 3) == Rational(1, 18));
    CHECK(normalization(3, 1) == Rational(1, 24));
    CHECK_THROWS(normalization(0, 1));
}

TEST_CASE("polynomial evaluation") {
    Polynomial p;
    p.coeffs = {Rational(1), Rational(-2), Rational(1)}; // (x-1)^2
    CHECK(p(Rational(1)) == Rational(0));
    CHECK(p(Rational(5, 2)) == Rational(9, 4));
}
