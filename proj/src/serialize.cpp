#include "lcmbin/serialize.hpp"

#include <cstdio>

namespace lcmbin {

namespace {

const char* bool_text(bool b) { return b ? "true" : "false"; }

constexpr const char* kChainLhsMethod =
    "weighted_row_lcm(n)|n*row_lcm_naive(n-1)|n*row_lcm_valuation(n-1)";

}  // namespace

nlohmann::json to_json(const PrimePowerFactorization& f) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& factor : f.factors()) arr.push_back({factor.prime.value(), factor.exponent});
    return arr;
}

std::string natural_text(const Natural& v, BigValueStyle style) {
    return style == BigValueStyle::kFull ? to_decimal(v) : std::to_string(decimal_digits(v));
}

void put_natural(nlohmann::json& obj, const std::string& key, const Natural& v, BigValueStyle style) {
    if (style == BigValueStyle::kFull) {
        obj[key] = to_decimal(v);
    } else {
        obj[key + "_digits"] = decimal_digits(v);
    }
}

nlohmann::json to_json(const IdentityReport& r, BigValueStyle style) {
    nlohmann::json j;
    j["theorem"] = std::string(theorem_label(r.theorem()));
    j["n"] = r.n();
    if (r.t()) j["t"] = *r.t();
    put_natural(j, "lhs", r.lhs(), style);
    put_natural(j, "rhs", r.rhs(), style);
    j["holds"] = r.holds();
    j["lhs_method"] = r.lhs_method();
    j["rhs_method"] = r.rhs_method();
    if (r.half_row_matches_full()) j["half_row_equals_full_row"] = *r.half_row_matches_full();
    return j;
}

nlohmann::json to_json(const EquivalenceChainReport& r, BigValueStyle style) {
    nlohmann::json j;
    j["theorem"] = "CHAIN";
    j["n"] = r.n();
    put_natural(j, "q_nair", r.q_nair(), style);
    put_natural(j, "q_thm4_rhs", r.q_thm4_rhs(), style);
    put_natural(j, "q_thm3_lhs", r.q_thm3_lhs(), style);
    put_natural(j, "q_range", r.q_range(), style);
    j["all_equal"] = r.all_equal();
    return j;
}

nlohmann::json to_json(const BoundsRecord& r) {
    return {
        {"n", r.n},
        {"lcm_digits", r.lcm_digits},
        {"holds_2nm1", r.lower_2nm1_holds},
        {"holds_2n", r.lower_2n_holds},
        {"holds_2n_informational", !r.lower_2n_required()},
        {"holds_3n", r.upper_3n_holds},
        {"psi_over_n", r.psi_over_n},
    };
}

nlohmann::json to_json(const BenchRecord& r) {
    return {
        {"task", std::string(task_label(r.task))},
        {"method", r.method},
        {"n", r.n},
        {"reps", r.reps},
        {"median_ns", r.median_ns},
        {"p90_ns", r.p90_ns},
        {"digits", r.digits},
        {"verified", r.verified},
    };
}

std::string format_ratio(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%#.12g", v);
    return buf;
}

std::string bounds_csv_header() { return "n,lcm_digits,holds_2nm1,holds_2n,holds_3n,psi_over_n"; }

std::string to_csv(const BoundsRecord& r) {
    return std::to_string(r.n) + "," + std::to_string(r.lcm_digits) + "," +
           bool_text(r.lower_2nm1_holds) + "," + bool_text(r.lower_2n_holds) + "," +
           bool_text(r.upper_3n_holds) + "," + format_ratio(r.psi_over_n);
}

std::string bench_csv_header() { return "task,method,n,reps,median_ns,p90_ns,digits,verified"; }

std::string to_csv(const BenchRecord& r) {
    return std::string(task_label(r.task)) + "," + r.method + "," + std::to_string(r.n) + "," +
           std::to_string(r.reps) + "," + std::to_string(r.median_ns) + "," +
           std::to_string(r.p90_ns) + "," + std::to_string(r.digits) + "," + bool_text(r.verified);
}

std::string verify_csv_header() {
    return "theorem,n,t,lhs,rhs,holds,lhs_method,rhs_method,half_row_equals_full_row";
}

std::string to_csv(const IdentityReport& r, BigValueStyle style) {
    const std::string t = r.t() ? std::to_string(*r.t()) : "";
    const std::string sub = r.half_row_matches_full() ? bool_text(*r.half_row_matches_full()) : "";
    return std::string(theorem_label(r.theorem())) + "," + std::to_string(r.n()) + "," + t + "," +
           natural_text(r.lhs(), style) + "," + natural_text(r.rhs(), style) + "," +
           bool_text(r.holds()) + "," + r.lhs_method() + "," + r.rhs_method() + "," + sub;
}

// A chain row carries q_nair as lhs and q_range as rhs; holds is all_equal,
// which also covers the two middle quantities.
std::string to_csv(const EquivalenceChainReport& r, BigValueStyle style) {
    return "CHAIN," + std::to_string(r.n()) + ",," + natural_text(r.q_nair(), style) + "," +
           natural_text(r.q_range(), style) + "," + bool_text(r.all_equal()) + "," + kChainLhsMethod +
           ",lcm_range(n).expand,";
}

}  // namespace lcmbin
