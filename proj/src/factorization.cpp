#include "lcmbin/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lcmbin/errors.hpp"

namespace lcmbin {

PrimePowerFactorization PrimePowerFactorization::from_pairs(
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs) {
    std::sort(pairs.begin(), pairs.end());
    PrimePowerFactorization f;
    for (const auto& [p, e] : pairs) {
        if (e == 0) continue;
        if (!f.factors_.empty() && f.factors_.back().prime.value() == p) {
            f.factors_.back().exponent += e;
        } else {
            f.factors_.push_back({Prime(p), e});
        }
    }
    return f;
}

void PrimePowerFactorization::push_back(Prime p, std::uint64_t exponent) {
    if (exponent == 0) return;
    if (!factors_.empty() && !(factors_.back().prime < p)) {
        throw DomainError("factor " + std::to_string(p.value()) +
                          " breaks increasing prime order");
    }
    factors_.push_back({p, exponent});
}

std::uint64_t PrimePowerFactorization::exponent_of(Prime p) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), p,
                               [](const Factor& f, Prime q) { return f.prime < q; });
    return (it != factors_.end() && it->prime == p) ? it->exponent : 0;
}

double PrimePowerFactorization::log2_upper_bound() const {
    double bits = 0.0;
    for (const auto& f : factors_) {
        bits += static_cast<double>(f.exponent) * std::log2(static_cast<double>(f.prime.value()));
    }
    return std::ceil(bits);
}

Natural PrimePowerFactorization::expand(const Limits& limits) const {
    if (log2_upper_bound() > static_cast<double>(limits.max_expand_bits)) {
        throw ResourceError("expansion needs ~" + std::to_string(log2_upper_bound()) +
                            " bits, cap is " + std::to_string(limits.max_expand_bits));
    }
    // Pairwise product tree keeps operand sizes balanced.
    std::vector<Natural> level;
    level.reserve(factors_.size());
    for (const auto& f : factors_) {
        Natural term;
        mpz_ui_pow_ui(term.get_mpz_t(), f.prime.value(), f.exponent);
        level.push_back(std::move(term));
    }
    if (level.empty()) return Natural(1);
    while (level.size() > 1) {
        std::vector<Natural> next;
        next.reserve((level.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(level[i] * level[i + 1]);
        if (level.size() % 2 == 1) next.push_back(std::move(level.back()));
        level = std::move(next);
    }
    return level.front();
}

}  // namespace lcmbin
