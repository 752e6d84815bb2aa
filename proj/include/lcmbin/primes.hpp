#pragma once

#include <cstdint>
#include <vector>

#include "lcmbin/limits.hpp"
#include "lcmbin/valuation.hpp"

namespace lcmbin {

/// All primes <= limit, increasing. Throws ResourceError above limits.max_sieve.
std::vector<Prime> sieve_primes(std::uint64_t limit, const Limits& limits = Limits::defaults());

}  // namespace lcmbin
