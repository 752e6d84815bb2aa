#include <doctest.h>

#include "lcmbin/errors.hpp"
#include "lcmbin/valuation.hpp"
#include "oracles.hpp"

using namespace lcmbin;

TEST_CASE("Prime construction checks primality") {
    CHECK(Prime(2).value() == 2);
    CHECK(Prime(4294967291ULL).value() == 4294967291ULL);  // largest prime below 2^32
    CHECK_THROWS_AS(Prime(0), DomainError);
    CHECK_THROWS_AS(Prime(1), DomainError);
    CHECK_THROWS_AS(Prime(9), DomainError);
    CHECK_THROWS_AS(Prime(4294967297ULL), DomainError);  // above the trial-division bound
    for (std::uint64_t v = 0; v < 2000; ++v) CHECK(is_prime(v) == oracle::is_prime_naive(v));
}

TEST_CASE("DigitVector is least significant first") {
    const DigitVector d(10, 3);  // 10 = 101_3
    REQUIRE(d.size() == 3);
    CHECK(d[0] == 1);
    CHECK(d[1] == 0);
    CHECK(d[2] == 1);
    CHECK(d[5] == 0);
    CHECK(DigitVector(0, 7).size() == 0);
    CHECK(DigitVector(~0ULL, 2).size() == 64);
}

TEST_CASE("legendre_factorial_valuation") {
    CHECK(legendre_factorial_valuation(0, Prime(2)).exponent == 0);
    CHECK(legendre_factorial_valuation(4, Prime(2)).exponent == 3);
    CHECK(legendre_factorial_valuation(10, Prime(3)).exponent == 4);

    for (unsigned long n = 0; n <= 60; ++n) {
        for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL, 59UL}) {
            CHECK(legendre_factorial_valuation(n, Prime(p)).exponent ==
                  oracle::valuation(oracle::factorial(n), p));
        }
    }
    // 2^64 - 1 must not overflow the power loop.
    CHECK(legendre_factorial_valuation(~0ULL, Prime(2)).exponent == ~0ULL - 64);
}

TEST_CASE("kummer_binomial_valuation") {
    CHECK(kummer_binomial_valuation(4, 0, Prime(2)).exponent == 0);
    CHECK(kummer_binomial_valuation(4, 2, Prime(2)).exponent == 1);
    CHECK(kummer_binomial_valuation(9, 3, Prime(3)).exponent == 1);
    CHECK_THROWS_AS(kummer_binomial_valuation(3, 4, Prime(2)), DomainError);
}

TEST_CASE("binomial_valuation") {
    CHECK(binomial_valuation(1, 1, Prime(2)).exponent == 0);
    CHECK(binomial_valuation(6, 3, Prime(2)).exponent == 2);
    CHECK(binomial_valuation(6, 3, Prime(5)).exponent == 1);
    CHECK(binomial_valuation(0, 0, Prime(2)).exponent == 0);
    CHECK_THROWS_AS(binomial_valuation(2, 3, Prime(2)), DomainError);
}

TEST_CASE("carry count equals direct factorization of C(n,k)") {
    for (unsigned long n = 0; n <= 80; ++n) {
        for (unsigned long k = 0; k <= n; ++k) {
            const mpz_class c = oracle::binomial(n, k);
            for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 13UL, 79UL}) {
                CHECK(binomial_valuation(n, k, Prime(p)).exponent == oracle::valuation(c, p));
            }
        }
    }
}

TEST_CASE("valuation properties: symmetry, edge entries, bound") {
    for (std::uint64_t n = 0; n <= 150; ++n) {
        for (std::uint64_t p = 2; p <= std::max<std::uint64_t>(n, 2); ++p) {
            if (!is_prime(p)) continue;
            const Prime prime(p);
            CHECK(binomial_valuation(n, 0, prime).exponent == 0);
            CHECK(binomial_valuation(n, n, prime).exponent == 0);
            for (std::uint64_t k = 0; k <= n; ++k) {
                const auto v = binomial_valuation(n, k, prime).exponent;
                CHECK(v == binomial_valuation(n, n - k, prime).exponent);
                if (n >= 1) {
                    std::uint64_t power = 1;
                    for (std::uint64_t i = 0; i < v; ++i) power *= p;
                    CHECK(power <= n);
                }
            }
        }
    }
}
