#pragma once

// Brute-force reference computations for tests. Built only on GMP primitives
// and naive loops, never on the lcmbin code paths they check.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace oracle {

inline mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// Exponent of p in m (m >= 1) by repeated division.
inline std::uint64_t valuation(mpz_class m, unsigned long p) {
    std::uint64_t e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++e;
    }
    return e;
}

inline mpz_class fold_lcm(const std::vector<mpz_class>& values) {
    mpz_class acc = 1;
    for (const auto& v : values) mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), v.get_mpz_t());
    return acc;
}

inline mpz_class lcm_upto(unsigned long n) {
    mpz_class acc = 1;
    for (unsigned long i = 1; i <= n; ++i) mpz_lcm_ui(acc.get_mpz_t(), acc.get_mpz_t(), i);
    return acc;
}

inline std::vector<mpz_class> row(unsigned long n) {
    std::vector<mpz_class> out;
    for (unsigned long k = 0; k <= n; ++k) out.push_back(binomial(n, k));
    return out;
}

inline bool is_prime_naive(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d < v; ++d) {
        if (v % d == 0) return false;
    }
    return true;
}

inline std::vector<std::uint64_t> primes_upto(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t v = 2; v <= limit; ++v) {
        if (is_prime_naive(v)) out.push_back(v);
    }
    return out;
}

}  // namespace oracle
