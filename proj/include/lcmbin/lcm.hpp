#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lcmbin/factorization.hpp"
#include "lcmbin/limits.hpp"
#include "lcmbin/natural.hpp"

namespace lcmbin {

/// Row n of Pascal's triangle.
struct BinomialRow {
    std::uint64_t n = 0;
    std::vector<Natural> entries;  // entries[k] == C(n, k)
};

/// Largest e with p^e <= n (0 when p > n), by repeated multiplication.
std::uint64_t max_power_exponent(std::uint64_t n, std::uint64_t p);

/// lcm(1..n) as prod p^e(p), p^e(p) <= n < p^(e(p)+1). n == 0 is a DomainError.
/// The per-prime loop runs under OpenMP; lcm_range_serial is the reference.
PrimePowerFactorization lcm_range(std::uint64_t n, const Limits& limits = Limits::defaults());
PrimePowerFactorization lcm_range_serial(std::uint64_t n, const Limits& limits = Limits::defaults());

/// lcm(1..n) by folding lcm over 1, 2, ..., n. Oracle for lcm_range; capped at
/// limits.max_fold_range.
Natural lcm_range_fold(std::uint64_t n, const Limits& limits = Limits::defaults());

/// lcm of a nonempty sequence of positive integers.
Natural lcm_sequence(std::span<const Natural> values);

/// C(n,k) by the multiplicative formula with exact division at each step.
/// k > n is a DomainError.
Natural binomial(std::uint64_t n, std::uint64_t k);

/// Additive Pascal recurrence. Capped at limits.max_row.
BinomialRow binomial_row(std::uint64_t n, const Limits& limits = Limits::defaults());

/// lcm(C(n,0), ..., C(n,n)) by materializing the row.
Natural row_lcm_naive(std::uint64_t n, const Limits& limits = Limits::defaults());

/// lcm(C(n,0), ..., C(n,floor(n/2))).
Natural half_row_lcm(std::uint64_t n, const Limits& limits = Limits::defaults());

/// lcm(1..n+1) / (n+1); throws ConsistencyError if the division is inexact.
Natural row_lcm_farhi(std::uint64_t n, const Limits& limits = Limits::defaults());

/// Row lcm from valuations: exponent of p is max_{k <= n/2} v_p(C(n,k)).
/// OpenMP over primes; row_lcm_valuation_serial is the reference.
PrimePowerFactorization row_lcm_valuation(std::uint64_t n, const Limits& limits = Limits::defaults());
PrimePowerFactorization row_lcm_valuation_serial(std::uint64_t n,
                                                 const Limits& limits = Limits::defaults());

/// lcm(1*C(n,1), 2*C(n,2), ..., n*C(n,n)); n >= 1.
Natural weighted_row_lcm(std::uint64_t n, const Limits& limits = Limits::defaults());

}  // namespace lcmbin
