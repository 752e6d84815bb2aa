#pragma once

#include <cstdint>

namespace lcmbin {

/// Resource caps. Every operation that can blow up takes its cap from here so
/// the CLI (flags / environment) can raise or lower them.
struct Limits {
    std::uint64_t max_sieve = 10'000'000;      // sieve_primes limit
    std::uint64_t max_row = 5'000;             // full binomial-row materialization
    std::uint64_t max_fold_range = 100'000;    // fold-lcm oracle over 1..n
    std::uint64_t max_factorization = 1'000'000;  // factorization-based paths
    std::uint64_t max_expand_bits = 1ULL << 27;   // PrimePowerFactorization::expand

    static const Limits& defaults() {
        static const Limits l{};
        return l;
    }
};

}  // namespace lcmbin
