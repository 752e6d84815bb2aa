#include "lcmbin/bounds.hpp"

#include <cmath>
#include <string>

#include "lcmbin/errors.hpp"
#include "lcmbin/lcm.hpp"
#include "lcmbin/primes.hpp"

namespace lcmbin {

namespace {

BoundsRecord make_record(std::uint64_t n, const Natural& lcm, double psi) {
    BoundsRecord r;
    r.n = n;
    r.lcm_digits = decimal_digits(lcm);
    r.lower_2nm1_holds = pow_ui(2, n - 1) <= lcm;
    r.lower_2n_holds = pow_ui(2, n) <= lcm;
    r.upper_3n_holds = lcm <= pow_ui(3, n);
    r.psi_over_n = psi / static_cast<double>(n);
    return r;
}

}  // namespace

void CompensatedSum::add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
        compensation_ += (sum_ - t) + x;
    } else {
        compensation_ += (x - t) + sum_;
    }
    sum_ = t;
}

double log_of(const PrimePowerFactorization& f) {
    CompensatedSum psi;
    for (const auto& factor : f.factors()) {
        psi.add(static_cast<double>(factor.exponent) * std::log(static_cast<double>(factor.prime.value())));
    }
    return psi.value();
}

double log_of(const Natural& v) {
    if (v <= 0) throw DomainError("log of a non-positive value");
    long exp2 = 0;
    const double mantissa = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log(mantissa) + static_cast<double>(exp2) * std::log(2.0);
}

BoundsRecord check_bounds(std::uint64_t n, const Limits& limits) {
    if (n == 0) throw DomainError("check_bounds needs n >= 1");
    const PrimePowerFactorization f = lcm_range(n, limits);
    return make_record(n, f.expand(limits), log_of(f));
}

std::vector<BoundsRecord> psi_table(std::uint64_t max_n, std::uint64_t step, const Limits& limits) {
    if (step == 0) throw DomainError("psi_table needs step >= 1");
    if (max_n == 0) throw DomainError("psi_table needs max_n >= 1");
    if (max_n > limits.max_factorization) {
        throw ResourceError("psi_table: max_n=" + std::to_string(max_n) + " exceeds cap " +
                            std::to_string(limits.max_factorization));
    }

    // prime_power_base[m] == p when m == p^a (a >= 1), else 0.
    std::vector<std::uint32_t> prime_power_base(max_n + 1, 0);
    for (Prime p : sieve_primes(max_n, limits)) {
        for (std::uint64_t m = p.value(); m <= max_n; m *= p.value()) {
            prime_power_base[m] = static_cast<std::uint32_t>(p.value());
            if (m > max_n / p.value()) break;
        }
    }

    std::vector<BoundsRecord> table;
    Natural lcm(1);
    CompensatedSum psi;
    for (std::uint64_t m = 1; m <= max_n; ++m) {
        if (const std::uint32_t p = prime_power_base[m]; p != 0) {
            lcm *= p;
            psi.add(std::log(static_cast<double>(p)));
        }
        if (m % step == 0) table.push_back(make_record(m, lcm, psi.value()));
    }
    return table;
}

}  // namespace lcmbin
