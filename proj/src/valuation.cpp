#include "lcmbin/valuation.hpp"

#include <string>

#include "lcmbin/errors.hpp"

namespace lcmbin {

bool is_prime(std::uint64_t value) {
    if (value < 2) return false;
    if (value < 4) return true;
    if (value % 2 == 0) return false;
    for (std::uint64_t d = 3; d <= value / d; d += 2) {
        if (value % d == 0) return false;
    }
    return true;
}

Prime::Prime(std::uint64_t value) : value_(value) {
    if (value > kMaxValue) {
        throw DomainError("prime candidate " + std::to_string(value) +
                          " exceeds the trial-division bound 2^32");
    }
    if (!is_prime(value)) {
        throw DomainError(std::to_string(value) + " is not prime");
    }
}

DigitVector::DigitVector(std::uint64_t value, std::uint64_t base) {
    while (value != 0) {
        digits_[size_++] = value % base;
        value /= base;
    }
}

namespace {

std::uint32_t count_carries(std::uint64_t a, std::uint64_t b, std::uint64_t base) {
    const DigitVector da(a, base);
    const DigitVector db(b, base);
    const std::size_t len = da.size() > db.size() ? da.size() : db.size();
    std::uint32_t carries = 0;
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < len; ++i) {
        carry = (da[i] + db[i] + carry) >= base ? 1 : 0;
        carries += static_cast<std::uint32_t>(carry);
    }
    return carries;
}

void require_k_le_n(std::uint64_t n, std::uint64_t k) {
    if (k > n) {
        throw DomainError("binomial valuation needs k <= n (got n=" + std::to_string(n) +
                          ", k=" + std::to_string(k) + ")");
    }
}

}  // namespace

Valuation legendre_factorial_valuation(std::uint64_t n, Prime p) {
    const std::uint64_t base = p.value();
    std::uint64_t total = 0;
    // n / p^i computed by repeated division, so p^i never overflows.
    for (std::uint64_t q = n / base; q != 0; q /= base) {
        total += q;
    }
    return {total};
}

Valuation kummer_binomial_valuation(std::uint64_t n, std::uint64_t k, Prime p) {
    require_k_le_n(n, k);
    return {count_carries(k, n - k, p.value())};
}

Valuation binomial_valuation(std::uint64_t n, std::uint64_t k, Prime p, ValuationCheck check) {
    const Valuation kummer = kummer_binomial_valuation(n, k, p);
    if (check == ValuationCheck::kCrossCheck) {
        const std::uint64_t legendre = legendre_factorial_valuation(n, p).exponent -
                                       legendre_factorial_valuation(k, p).exponent -
                                       legendre_factorial_valuation(n - k, p).exponent;
        if (legendre != kummer.exponent) {
            throw ConsistencyError("Kummer/Legendre disagree for v_" + std::to_string(p.value()) +
                                   "(C(" + std::to_string(n) + "," + std::to_string(k) + "))");
        }
    }
    return kummer;
}

}  // namespace lcmbin
