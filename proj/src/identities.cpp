#include "lcmbin/identities.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "lcmbin/errors.hpp"
#include "lcmbin/lcm.hpp"
#include "parallel.hpp"

namespace lcmbin {

namespace {

void require_positive(std::uint64_t n, TheoremId id) {
    if (n == 0) {
        throw DomainError(std::string(theorem_label(id)) + " is stated for n >= 1");
    }
}

Natural times_n(std::uint64_t n, Natural v) {
    v *= natural_from(n);
    return v;
}

constexpr const char* kRangeMethod = "lcm_range(n).expand";
constexpr const char* kShiftedRowMethod = "n*row_lcm_naive(n-1)";
constexpr const char* kWeightedMethod = "weighted_row_lcm(n)";

}  // namespace

std::string_view theorem_label(TheoremId id) {
    switch (id) {
        case TheoremId::T1: return "T1";
        case TheoremId::T2: return "T2";
        case TheoremId::T3: return "T3";
        case TheoremId::T4: return "T4";
        case TheoremId::T5: return "T5";
        case TheoremId::Termwise: return "TERMWISE";
    }
    return "?";
}

std::optional<TheoremId> parse_theorem(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower.size() == 2 && lower[0] == 't') lower.erase(0, 1);
    if (lower == "1") return TheoremId::T1;
    if (lower == "2") return TheoremId::T2;
    if (lower == "3") return TheoremId::T3;
    if (lower == "4") return TheoremId::T4;
    if (lower == "5") return TheoremId::T5;
    if (lower == "termwise") return TheoremId::Termwise;
    return std::nullopt;
}

std::uint64_t theorem_min_n(TheoremId id) { return id == TheoremId::T2 ? 0 : 1; }

IdentityReport::IdentityReport(TheoremId theorem, std::uint64_t n, Natural lhs, Natural rhs,
                               std::string lhs_method, std::string rhs_method,
                               std::optional<std::uint64_t> t)
    : theorem_(theorem),
      n_(n),
      t_(t),
      lhs_(std::move(lhs)),
      rhs_(std::move(rhs)),
      lhs_method_(std::move(lhs_method)),
      rhs_method_(std::move(rhs_method)),
      holds_(lhs_ == rhs_) {}

EquivalenceChainReport::EquivalenceChainReport(std::uint64_t n, Natural q_nair, Natural q_thm4_rhs,
                                               Natural q_thm3_lhs, Natural q_range)
    : n_(n),
      q_nair_(std::move(q_nair)),
      q_thm4_rhs_(std::move(q_thm4_rhs)),
      q_thm3_lhs_(std::move(q_thm3_lhs)),
      q_range_(std::move(q_range)),
      all_equal_(q_nair_ == q_thm4_rhs_ && q_thm4_rhs_ == q_thm3_lhs_ && q_thm3_lhs_ == q_range_) {}

// Left-hand sides never touch lcm_range, so a bug there cannot make both
// sides agree by accident.

IdentityReport verify_nair(std::uint64_t n, const Limits& limits) {
    require_positive(n, TheoremId::T1);
    return {TheoremId::T1, n, weighted_row_lcm(n, limits), lcm_range(n, limits).expand(limits),
            kWeightedMethod, kRangeMethod};
}

IdentityReport verify_farhi(std::uint64_t n, const Limits& limits) {
    return {TheoremId::T2, n, row_lcm_naive(n, limits), row_lcm_farhi(n, limits),
            "row_lcm_naive(n)", "row_lcm_farhi(n)"};
}

IdentityReport verify_theorem3(std::uint64_t n, const Limits& limits) {
    require_positive(n, TheoremId::T3);
    return {TheoremId::T3, n, times_n(n, row_lcm_naive(n - 1, limits)),
            lcm_range(n, limits).expand(limits), kShiftedRowMethod, kRangeMethod};
}

IdentityReport verify_theorem4(std::uint64_t n, const Limits& limits) {
    require_positive(n, TheoremId::T4);
    return {TheoremId::T4, n, weighted_row_lcm(n, limits), times_n(n, row_lcm_naive(n - 1, limits)),
            kWeightedMethod, kShiftedRowMethod};
}

IdentityReport verify_theorem5(std::uint64_t n, const Limits& limits) {
    require_positive(n, TheoremId::T5);
    const Natural half = half_row_lcm(n - 1, limits);
    const Natural full = row_lcm_naive(n - 1, limits);
    IdentityReport report{TheoremId::T5, n, times_n(n, half), lcm_range(n, limits).expand(limits),
                          "n*half_row_lcm(n-1)", kRangeMethod};
    report.set_half_row_matches_full(half == full);
    return report;
}

bool termwise_identity(std::uint64_t n, std::uint64_t t) {
    return termwise_report(n, t).holds();
}

IdentityReport termwise_report(std::uint64_t n, std::uint64_t t) {
    if (t == 0 || t > n) {
        throw DomainError("termwise identity needs 1 <= t <= n (got n=" + std::to_string(n) +
                          ", t=" + std::to_string(t) + ")");
    }
    Natural lhs = binomial(n, t) * natural_from(t);
    Natural rhs = binomial(n - 1, t - 1) * natural_from(n);
    return {TheoremId::Termwise, n, std::move(lhs), std::move(rhs), "t*C(n,t)", "n*C(n-1,t-1)", t};
}

EquivalenceChainReport equivalence_chain(std::uint64_t n, const Limits& limits) {
    if (n == 0) throw DomainError("equivalence chain is stated for n >= 1");
    return {n, weighted_row_lcm(n, limits), times_n(n, row_lcm_naive(n - 1, limits)),
            times_n(n, row_lcm_valuation(n - 1, limits).expand(limits)),
            lcm_range(n, limits).expand(limits)};
}

std::vector<IdentityReport> verify_range(TheoremId theorem, std::uint64_t from, std::uint64_t to,
                                         const Limits& limits) {
    if (from > to) throw DomainError("verify_range needs from <= to");
    if (from < theorem_min_n(theorem)) {
        throw DomainError(std::string(theorem_label(theorem)) + " is stated for n >= " +
                          std::to_string(theorem_min_n(theorem)));
    }
    const std::size_t count = static_cast<std::size_t>(to - from + 1);

    if (theorem == TheoremId::Termwise) {
        std::vector<std::vector<IdentityReport>> per_n(count);
        detail::parallel_for(count, [&](std::size_t i) {
            const std::uint64_t n = from + i;
            per_n[i].reserve(n);
            for (std::uint64_t t = 1; t <= n; ++t) per_n[i].push_back(termwise_report(n, t));
        });
        std::vector<IdentityReport> out;
        for (auto& block : per_n) {
            for (auto& r : block) out.push_back(std::move(r));
        }
        return out;
    }

    std::vector<std::optional<IdentityReport>> slots(count);
    detail::parallel_for(count, [&](std::size_t i) {
        const std::uint64_t n = from + i;
        switch (theorem) {
            case TheoremId::T1: slots[i] = verify_nair(n, limits); break;
            case TheoremId::T2: slots[i] = verify_farhi(n, limits); break;
            case TheoremId::T3: slots[i] = verify_theorem3(n, limits); break;
            case TheoremId::T4: slots[i] = verify_theorem4(n, limits); break;
            case TheoremId::T5: slots[i] = verify_theorem5(n, limits); break;
            case TheoremId::Termwise: break;
        }
    });
    std::vector<IdentityReport> out;
    out.reserve(count);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

std::vector<EquivalenceChainReport> chain_range(std::uint64_t from, std::uint64_t to,
                                                const Limits& limits) {
    if (from > to) throw DomainError("chain_range needs from <= to");
    if (from == 0) throw DomainError("equivalence chain is stated for n >= 1");
    const std::size_t count = static_cast<std::size_t>(to - from + 1);
    std::vector<std::optional<EquivalenceChainReport>> slots(count);
    detail::parallel_for(count, [&](std::size_t i) { slots[i] = equivalence_chain(from + i, limits); });
    std::vector<EquivalenceChainReport> out;
    out.reserve(count);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

}  // namespace lcmbin
