#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcmbin/limits.hpp"
#include "lcmbin/natural.hpp"

namespace lcmbin {

enum class TheoremId { T1, T2, T3, T4, T5, Termwise };

std::string_view theorem_label(TheoremId id);
/// Accepts "T1".."T5", "1".."5" and "termwise" (case-insensitive). nullopt otherwise.
std::optional<TheoremId> parse_theorem(std::string_view text);
/// Smallest n the theorem is stated for: 0 for T2, 1 otherwise.
std::uint64_t theorem_min_n(TheoremId id);

/// One instance of an identity. holds() is fixed at construction as lhs == rhs.
class IdentityReport {
public:
    IdentityReport(TheoremId theorem, std::uint64_t n, Natural lhs, Natural rhs,
                   std::string lhs_method, std::string rhs_method,
                   std::optional<std::uint64_t> t = std::nullopt);

    TheoremId theorem() const { return theorem_; }
    std::uint64_t n() const { return n_; }
    /// Set only for termwise reports.
    const std::optional<std::uint64_t>& t() const { return t_; }
    const Natural& lhs() const { return lhs_; }
    const Natural& rhs() const { return rhs_; }
    const std::string& lhs_method() const { return lhs_method_; }
    const std::string& rhs_method() const { return rhs_method_; }
    bool holds() const { return holds_; }

    /// Theorem 5 only: whether the half-row lcm of row n-1 equals the full-row
    /// lcm. Reported alongside holds(), not folded into it.
    const std::optional<bool>& half_row_matches_full() const { return half_row_matches_full_; }
    void set_half_row_matches_full(bool v) { half_row_matches_full_ = v; }

    /// holds() and, when present, the half-row sub-check.
    bool all_checks_pass() const { return holds_ && half_row_matches_full_.value_or(true); }

private:
    TheoremId theorem_;
    std::uint64_t n_;
    std::optional<std::uint64_t> t_;
    Natural lhs_;
    Natural rhs_;
    std::string lhs_method_;
    std::string rhs_method_;
    bool holds_;
    std::optional<bool> half_row_matches_full_;
};

/// The four quantities tied together by the bridge identity:
///   weighted_row_lcm(n) = n*lcm(row n-1) (naive) = n*lcm(row n-1) (valuation) = lcm(1..n).
class EquivalenceChainReport {
public:
    EquivalenceChainReport(std::uint64_t n, Natural q_nair, Natural q_thm4_rhs,
                           Natural q_thm3_lhs, Natural q_range);

    std::uint64_t n() const { return n_; }
    const Natural& q_nair() const { return q_nair_; }
    const Natural& q_thm4_rhs() const { return q_thm4_rhs_; }
    const Natural& q_thm3_lhs() const { return q_thm3_lhs_; }
    const Natural& q_range() const { return q_range_; }
    bool all_equal() const { return all_equal_; }

private:
    std::uint64_t n_;
    Natural q_nair_;
    Natural q_thm4_rhs_;
    Natural q_thm3_lhs_;
    Natural q_range_;
    bool all_equal_;
};

/// lcm(C(n,1), 2C(n,2), ..., nC(n,n)) vs lcm(1..n); n >= 1.
IdentityReport verify_nair(std::uint64_t n, const Limits& limits = Limits::defaults());
/// lcm(C(n,0), ..., C(n,n)) vs lcm(1..n+1)/(n+1); n >= 0.
IdentityReport verify_farhi(std::uint64_t n, const Limits& limits = Limits::defaults());
/// n*lcm(row n-1) vs lcm(1..n); n >= 1.
IdentityReport verify_theorem3(std::uint64_t n, const Limits& limits = Limits::defaults());
/// lcm(weighted row n) vs n*lcm(row n-1); n >= 1.
IdentityReport verify_theorem4(std::uint64_t n, const Limits& limits = Limits::defaults());
/// n*lcm(first half of row n-1) vs lcm(1..n); n >= 1. Also fills the half-row
/// sub-check.
IdentityReport verify_theorem5(std::uint64_t n, const Limits& limits = Limits::defaults());

/// t*C(n,t) == n*C(n-1,t-1) for 1 <= t <= n.
bool termwise_identity(std::uint64_t n, std::uint64_t t);
IdentityReport termwise_report(std::uint64_t n, std::uint64_t t);

EquivalenceChainReport equivalence_chain(std::uint64_t n, const Limits& limits = Limits::defaults());

/// Every n in [from, to], in order, no short-circuit. For Termwise, one report
/// per (n, t) with 1 <= t <= n. Instances are evaluated in parallel.
std::vector<IdentityReport> verify_range(TheoremId theorem, std::uint64_t from, std::uint64_t to,
                                         const Limits& limits = Limits::defaults());
std::vector<EquivalenceChainReport> chain_range(std::uint64_t from, std::uint64_t to,
                                                const Limits& limits = Limits::defaults());

}  // namespace lcmbin
