#pragma once

#include <string>

#include <json.hpp>

#include "lcmbin/bench.hpp"
#include "lcmbin/bounds.hpp"
#include "lcmbin/factorization.hpp"
#include "lcmbin/identities.hpp"

namespace lcmbin {

/// How big integers appear in output: the full decimal string, or only its
/// digit count (for values with tens of thousands of digits).
enum class BigValueStyle { kFull, kDigitsOnly };

/// [[p, e], ...] in increasing prime order.
nlohmann::json to_json(const PrimePowerFactorization& f);

/// Adds `key` (decimal string) or `key_digits` (count) to obj.
void put_natural(nlohmann::json& obj, const std::string& key, const Natural& v, BigValueStyle style);

nlohmann::json to_json(const IdentityReport& r, BigValueStyle style = BigValueStyle::kFull);
nlohmann::json to_json(const EquivalenceChainReport& r, BigValueStyle style = BigValueStyle::kFull);
nlohmann::json to_json(const BoundsRecord& r);
nlohmann::json to_json(const BenchRecord& r);

/// psi_over_n with 12 significant digits.
std::string format_ratio(double v);

std::string natural_text(const Natural& v, BigValueStyle style);

std::string bounds_csv_header();
std::string to_csv(const BoundsRecord& r);

std::string bench_csv_header();
std::string to_csv(const BenchRecord& r);

std::string verify_csv_header();
std::string to_csv(const IdentityReport& r, BigValueStyle style = BigValueStyle::kFull);
std::string to_csv(const EquivalenceChainReport& r, BigValueStyle style = BigValueStyle::kFull);

}  // namespace lcmbin
