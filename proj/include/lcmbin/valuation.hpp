#pragma once

#include <array>
#include <cstdint>
#include <cstddef>

namespace lcmbin {

/// A prime number. Construction runs deterministic trial division up to
/// sqrt(value), which is only reasonable for value < 2^32; larger values are
/// rejected with DomainError.
class Prime {
public:
    static constexpr std::uint64_t kMaxValue = (1ULL << 32) - 1;

    explicit Prime(std::uint64_t value);

    /// Skips the primality check. Only for values that already came out of a
    /// sieve.
    static Prime trusted(std::uint64_t value) { return Prime(value, TrustedTag{}); }

    std::uint64_t value() const { return value_; }

    friend bool operator==(Prime, Prime) = default;
    friend auto operator<=>(Prime, Prime) = default;

private:
    struct TrustedTag {};
    Prime(std::uint64_t value, TrustedTag) : value_(value) {}

    std::uint64_t value_;
};

bool is_prime(std::uint64_t value);

/// The exponent v_p(m) of a prime in some quantity.
struct Valuation {
    std::uint64_t exponent = 0;

    friend bool operator==(Valuation, Valuation) = default;
    friend auto operator<=>(Valuation, Valuation) = default;
};

/// Base-p digits of a 64-bit value, least significant first, fixed capacity
/// (p >= 2 gives at most 64 digits). Unused slots stay zero, so two vectors of
/// different length can be walked in lockstep.
class DigitVector {
public:
    DigitVector(std::uint64_t value, std::uint64_t base);

    std::size_t size() const { return size_; }
    std::uint64_t operator[](std::size_t i) const { return digits_[i]; }

private:
    std::array<std::uint64_t, 64> digits_{};
    std::size_t size_ = 0;
};

/// v_p(n!) = sum_{i>=1} floor(n / p^i).
Valuation legendre_factorial_valuation(std::uint64_t n, Prime p);

/// Number of carries when adding k and n-k in base p. Throws DomainError when
/// k > n.
Valuation kummer_binomial_valuation(std::uint64_t n, std::uint64_t k, Prime p);

enum class ValuationCheck { kCrossCheck, kKummerOnly };

/// v_p(C(n,k)). Computed by carry counting; with kCrossCheck the Legendre
/// difference v_p(n!) - v_p(k!) - v_p((n-k)!) is also computed and a mismatch
/// raises ConsistencyError.
Valuation binomial_valuation(std::uint64_t n, std::uint64_t k, Prime p,
                             ValuationCheck check = ValuationCheck::kCrossCheck);

}  // namespace lcmbin
