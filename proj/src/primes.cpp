#include "lcmbin/primes.hpp"

#include <string>

#include "lcmbin/errors.hpp"

namespace lcmbin {

std::vector<Prime> sieve_primes(std::uint64_t limit, const Limits& limits) {
    if (limit > limits.max_sieve) {
        throw ResourceError("sieve limit " + std::to_string(limit) + " exceeds cap " +
                            std::to_string(limits.max_sieve));
    }
    std::vector<Prime> primes;
    if (limit < 2) return primes;

    // Odd-only sieve: slot i stands for 2i+1.
    const std::uint64_t slots = (limit + 1) / 2;
    std::vector<bool> composite(slots, false);
    for (std::uint64_t i = 1; (2 * i + 1) * (2 * i + 1) <= limit; ++i) {
        if (composite[i]) continue;
        const std::uint64_t step = 2 * i + 1;
        for (std::uint64_t j = (step * step) / 2; j < slots; j += step) composite[j] = true;
    }
    primes.push_back(Prime::trusted(2));
    for (std::uint64_t i = 1; i < slots; ++i) {
        if (!composite[i]) primes.push_back(Prime::trusted(2 * i + 1));
    }
    return primes;
}

}  // namespace lcmbin
