#include <doctest.h>

#include <random>

#include "lcmbin/errors.hpp"
#include "lcmbin/factorization.hpp"
#include "lcmbin/primes.hpp"
#include "oracles.hpp"

using namespace lcmbin;

namespace {

std::vector<std::uint64_t> values(const std::vector<Prime>& primes) {
    std::vector<std::uint64_t> out;
    for (Prime p : primes) out.push_back(p.value());
    return out;
}

}  // namespace

TEST_CASE("sieve_primes small limits") {
    CHECK(sieve_primes(0).empty());
    CHECK(sieve_primes(1).empty());
    CHECK(values(sieve_primes(2)) == std::vector<std::uint64_t>{2});
    CHECK(values(sieve_primes(10)) == std::vector<std::uint64_t>{2, 3, 5, 7});
    CHECK(values(sieve_primes(30)) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
}

TEST_CASE("sieve_primes agrees with trial division") {
    for (std::uint64_t limit : {3, 4, 48, 49, 50, 121, 997, 1000, 3000}) {
        CHECK(values(sieve_primes(limit)) == oracle::primes_upto(limit));
    }
    CHECK(sieve_primes(1'000'000).size() == 78498);
}

TEST_CASE("sieve_primes resource cap") {
    Limits limits;
    limits.max_sieve = 100;
    CHECK(sieve_primes(100, limits).size() == 25);
    CHECK_THROWS_AS(sieve_primes(101, limits), ResourceError);
}

TEST_CASE("PrimePowerFactorization canonical form") {
    const auto f = PrimePowerFactorization::from_pairs({{5, 1}, {2, 2}, {3, 0}, {2, 1}, {7, 0}});
    REQUIRE(f.size() == 2);
    CHECK(f.factors()[0] == PrimePowerFactorization::Factor{Prime(2), 3});
    CHECK(f.factors()[1] == PrimePowerFactorization::Factor{Prime(5), 1});
    CHECK(f.exponent_of(Prime(2)) == 3);
    CHECK(f.exponent_of(Prime(3)) == 0);
    CHECK(f.expand() == 40);
    CHECK(PrimePowerFactorization().expand() == 1);
    CHECK_THROWS_AS(PrimePowerFactorization::from_pairs({{4, 1}}), DomainError);

    PrimePowerFactorization g;
    g.push_back(Prime(3), 2);
    g.push_back(Prime(5), 0);
    CHECK(g.size() == 1);
    CHECK_THROWS_AS(g.push_back(Prime(2), 1), DomainError);
    CHECK_THROWS_AS(g.push_back(Prime(3), 1), DomainError);
}

TEST_CASE("expand is injective on random factorizations") {
    std::mt19937_64 rng(20261016);
    const auto primes = sieve_primes(60);
    std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
    std::uniform_int_distribution<std::uint64_t> exp(0, 4);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> a, b;
        for (int i = 0; i < 4; ++i) {
            a.emplace_back(primes[pick(rng)].value(), exp(rng));
            b.emplace_back(primes[pick(rng)].value(), exp(rng));
        }
        const auto fa = PrimePowerFactorization::from_pairs(a);
        const auto fb = PrimePowerFactorization::from_pairs(b);
        CHECK((fa == fb) == (fa.expand() == fb.expand()));
        // Expansion round-trips through direct valuation of the product.
        const Natural value = fa.expand();
        for (const auto& factor : fa.factors()) {
            CHECK(oracle::valuation(value, factor.prime.value()) == factor.exponent);
        }
    }
}

TEST_CASE("expand respects the bit cap") {
    Limits limits;
    limits.max_expand_bits = 64;
    const auto small = PrimePowerFactorization::from_pairs({{2, 63}});
    CHECK(small.expand(limits) == pow_ui(2, 63));
    const auto big = PrimePowerFactorization::from_pairs({{2, 65}});
    CHECK_THROWS_AS(big.expand(limits), ResourceError);
}
