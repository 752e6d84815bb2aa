#pragma once

#include <cstdint>
#include <vector>

#include "lcmbin/factorization.hpp"
#include "lcmbin/limits.hpp"
#include "lcmbin/natural.hpp"

namespace lcmbin {

/// lcm(1..n) against 2^(n-1), 2^n and 3^n (exact comparisons), plus
/// ln lcm(1..n) / n.
struct BoundsRecord {
    std::uint64_t n = 0;
    std::uint64_t lcm_digits = 0;
    bool lower_2nm1_holds = false;
    bool lower_2n_holds = false;  // informational for n < 9
    bool upper_3n_holds = false;
    double psi_over_n = 0.0;

    bool lower_2n_required() const { return n >= 9; }
    /// Every flag that is actually claimed at this n.
    bool required_bounds_hold() const {
        return lower_2nm1_holds && upper_3n_holds && (!lower_2n_required() || lower_2n_holds);
    }
};

/// Compensated (Neumaier) summation.
class CompensatedSum {
public:
    void add(double x);
    double value() const { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

/// Chebyshev psi from a factorization: sum e(p) * ln p, compensated.
double log_of(const PrimePowerFactorization& f);
/// ln of an expanded integer via mantissa/exponent split; the float cross-check.
double log_of(const Natural& v);

BoundsRecord check_bounds(std::uint64_t n, const Limits& limits = Limits::defaults());

/// Records at n = step, 2*step, ... <= max_n. One sieve and a running lcm;
/// sequential.
std::vector<BoundsRecord> psi_table(std::uint64_t max_n, std::uint64_t step,
                                    const Limits& limits = Limits::defaults());

}  // namespace lcmbin
