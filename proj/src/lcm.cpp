#include "lcmbin/lcm.hpp"

#include <algorithm>
#include <string>

#include "lcmbin/errors.hpp"
#include "lcmbin/primes.hpp"
#include "lcmbin/valuation.hpp"
#include "parallel.hpp"

namespace lcmbin {

namespace {

void require_cap(std::uint64_t n, std::uint64_t cap, const char* what) {
    if (n > cap) {
        throw ResourceError(std::string(what) + ": n=" + std::to_string(n) + " exceeds cap " +
                            std::to_string(cap));
    }
}

// Carries in k + (n-k) happen at digit positions below the top digit of n, so
// v_p(C(n,k)) <= (number of base-p digits of n) - 1.
std::uint64_t row_exponent(std::uint64_t n, Prime p) {
    const std::uint64_t ceiling = DigitVector(n, p.value()).size() - 1;
    std::uint64_t best = 0;
    for (std::uint64_t k = 1; k <= n / 2 && best < ceiling; ++k) {
        best = std::max(best, binomial_valuation(n, k, p).exponent);
    }
    return best;
}

PrimePowerFactorization assemble(const std::vector<Prime>& primes,
                                 const std::vector<std::uint64_t>& exponents) {
    PrimePowerFactorization f;
    for (std::size_t i = 0; i < primes.size(); ++i) f.push_back(primes[i], exponents[i]);
    return f;
}

void require_range_n(std::uint64_t n, const Limits& limits) {
    if (n == 0) throw DomainError("lcm_range needs n >= 1");
    require_cap(n, limits.max_factorization, "lcm_range");
}

}  // namespace

std::uint64_t max_power_exponent(std::uint64_t n, std::uint64_t p) {
    std::uint64_t e = 0;
    // power <= n / p  <=>  power * p <= n, without overflow.
    for (std::uint64_t power = 1; power <= n / p; power *= p) ++e;
    return e;
}

PrimePowerFactorization lcm_range(std::uint64_t n, const Limits& limits) {
    require_range_n(n, limits);
    const auto primes = sieve_primes(n, limits);
    std::vector<std::uint64_t> exponents(primes.size());
    detail::parallel_for(primes.size(), [&](std::size_t i) {
        exponents[i] = max_power_exponent(n, primes[i].value());
    });
    return assemble(primes, exponents);
}

PrimePowerFactorization lcm_range_serial(std::uint64_t n, const Limits& limits) {
    require_range_n(n, limits);
    PrimePowerFactorization f;
    for (Prime p : sieve_primes(n, limits)) f.push_back(p, max_power_exponent(n, p.value()));
    return f;
}

Natural lcm_range_fold(std::uint64_t n, const Limits& limits) {
    if (n == 0) throw DomainError("lcm_range_fold needs n >= 1");
    require_cap(n, limits.max_fold_range, "lcm_range_fold");
    Natural acc(1);
    Natural term;
    for (std::uint64_t i = 2; i <= n; ++i) {
        term = natural_from(i);
        mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), term.get_mpz_t());
    }
    return acc;
}

Natural lcm_sequence(std::span<const Natural> values) {
    if (values.empty()) throw DomainError("lcm of an empty sequence");
    Natural acc(1);
    Natural g;
    for (const Natural& v : values) {
        if (v <= 0) throw DomainError("lcm_sequence elements must be >= 1");
        // acc = acc / gcd(acc, v) * v
        mpz_gcd(g.get_mpz_t(), acc.get_mpz_t(), v.get_mpz_t());
        mpz_divexact(acc.get_mpz_t(), acc.get_mpz_t(), g.get_mpz_t());
        acc *= v;
    }
    return acc;
}

Natural binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) {
        throw DomainError("binomial needs k <= n (got n=" + std::to_string(n) +
                          ", k=" + std::to_string(k) + ")");
    }
    k = std::min(k, n - k);
    Natural acc(1);
    // After step i, acc == C(n-k+i, i).
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc *= natural_from(n - k + i);
        mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), i);
    }
    return acc;
}

BinomialRow binomial_row(std::uint64_t n, const Limits& limits) {
    require_cap(n, limits.max_row, "binomial_row");
    BinomialRow row;
    row.n = n;
    row.entries.assign(n + 1, Natural(0));
    row.entries[0] = 1;
    // Row r from row r-1, updating right to left in place.
    for (std::uint64_t r = 1; r <= n; ++r) {
        for (std::uint64_t k = r; k >= 1; --k) row.entries[k] += row.entries[k - 1];
    }
    return row;
}

Natural row_lcm_naive(std::uint64_t n, const Limits& limits) {
    const BinomialRow row = binomial_row(n, limits);
    return lcm_sequence(row.entries);
}

Natural half_row_lcm(std::uint64_t n, const Limits& limits) {
    const BinomialRow row = binomial_row(n, limits);
    return lcm_sequence(std::span<const Natural>(row.entries).first(n / 2 + 1));
}

Natural row_lcm_farhi(std::uint64_t n, const Limits& limits) {
    const Natural range = lcm_range(n + 1, limits).expand(limits);
    const Natural divisor = natural_from(n + 1);
    if (!mpz_divisible_p(range.get_mpz_t(), divisor.get_mpz_t())) {
        throw ConsistencyError("lcm(1.." + std::to_string(n + 1) + ") is not divisible by " +
                               std::to_string(n + 1));
    }
    Natural q;
    mpz_divexact(q.get_mpz_t(), range.get_mpz_t(), divisor.get_mpz_t());
    return q;
}

PrimePowerFactorization row_lcm_valuation(std::uint64_t n, const Limits& limits) {
    require_cap(n, limits.max_factorization, "row_lcm_valuation");
    const auto primes = sieve_primes(n, limits);
    std::vector<std::uint64_t> exponents(primes.size());
    detail::parallel_for(primes.size(), [&](std::size_t i) {
        exponents[i] = row_exponent(n, primes[i]);
    });
    return assemble(primes, exponents);
}

PrimePowerFactorization row_lcm_valuation_serial(std::uint64_t n, const Limits& limits) {
    require_cap(n, limits.max_factorization, "row_lcm_valuation");
    PrimePowerFactorization f;
    for (Prime p : sieve_primes(n, limits)) f.push_back(p, row_exponent(n, p));
    return f;
}

Natural weighted_row_lcm(std::uint64_t n, const Limits& limits) {
    if (n == 0) throw DomainError("weighted_row_lcm needs n >= 1");
    BinomialRow row = binomial_row(n, limits);
    std::vector<Natural> weighted;
    weighted.reserve(n);
    for (std::uint64_t k = 1; k <= n; ++k) {
        Natural w = row.entries[k];
        w *= natural_from(k);
        weighted.push_back(std::move(w));
    }
    return lcm_sequence(weighted);
}

}  // namespace lcmbin
