#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace lcmbin {

/// Arbitrary-precision nonnegative integer. Backed by GMP; every value the
/// library hands out is >= 0.
using Natural = mpz_class;

inline Natural natural_from(std::uint64_t v) {
    Natural r;
    mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return r;
}

inline std::string to_decimal(const Natural& v) { return v.get_str(10); }

/// Exact count of decimal digits (mpz_sizeinbase may overshoot by one).
inline std::uint64_t decimal_digits(const Natural& v) {
    if (v == 0) return 1;
    std::uint64_t d = mpz_sizeinbase(v.get_mpz_t(), 10);
    Natural lower;
    mpz_ui_pow_ui(lower.get_mpz_t(), 10, d - 1);
    return v < lower ? d - 1 : d;
}

inline Natural pow_ui(unsigned long base, unsigned long exponent) {
    Natural r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exponent);
    return r;
}

}  // namespace lcmbin
