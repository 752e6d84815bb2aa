#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "lcmbin/limits.hpp"
#include "lcmbin/natural.hpp"
#include "lcmbin/valuation.hpp"

namespace lcmbin {

/// Canonical prime-power product: primes strictly increasing, every stored
/// exponent >= 1. The empty factorization is 1.
class PrimePowerFactorization {
public:
    struct Factor {
        Prime prime;
        std::uint64_t exponent;

        friend bool operator==(const Factor&, const Factor&) = default;
    };

    PrimePowerFactorization() = default;

    /// Builds from arbitrary (prime, exponent) pairs: sorts, merges repeated
    /// primes by adding exponents, drops zero exponents.
    static PrimePowerFactorization from_pairs(std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs);

    /// Appends a factor whose prime exceeds every stored prime. Zero exponents
    /// are ignored. Throws DomainError if ordering would break.
    void push_back(Prime p, std::uint64_t exponent);

    const std::vector<Factor>& factors() const { return factors_; }
    bool empty() const { return factors_.empty(); }
    std::size_t size() const { return factors_.size(); }

    /// Exponent of p (0 if absent).
    std::uint64_t exponent_of(Prime p) const;

    /// log2 of the value, rounded up; used for the expansion cap.
    double log2_upper_bound() const;

    /// Multiplies the factorization out. Throws ResourceError when the result
    /// would exceed limits.max_expand_bits.
    Natural expand(const Limits& limits = Limits::defaults()) const;

    friend bool operator==(const PrimePowerFactorization&, const PrimePowerFactorization&) = default;

private:
    std::vector<Factor> factors_;
};

}  // namespace lcmbin
