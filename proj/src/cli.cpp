#include "lcmbin/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcmbin/bench.hpp"
#include "lcmbin/bounds.hpp"
#include "lcmbin/errors.hpp"
#include "lcmbin/identities.hpp"
#include "lcmbin/lcm.hpp"
#include "lcmbin/serialize.hpp"

namespace lcmbin::cli {

namespace {

enum class Format { kPlain, kJson, kCsv };

struct CapOption {
    const char* flag;
    const char* env;
    std::uint64_t Limits::*field;
    const char* help;
};

// Environment first, flags override.
constexpr CapOption kCaps[] = {
    {"--max-sieve", "LCMBIN_MAX_SIEVE", &Limits::max_sieve, "Largest prime-sieve limit"},
    {"--max-row", "LCMBIN_MAX_ROW", &Limits::max_row, "Largest n for full binomial rows"},
    {"--max-fold", "LCMBIN_MAX_FOLD", &Limits::max_fold_range, "Largest n for the fold-lcm oracle"},
    {"--max-factorization", "LCMBIN_MAX_FACTORIZATION", &Limits::max_factorization,
     "Largest n for factorization paths"},
    {"--max-expand-bits", "LCMBIN_MAX_EXPAND_BITS", &Limits::max_expand_bits,
     "Largest bit length a factorization may expand to"},
};

struct Options {
    Format format = Format::kPlain;
    bool digits_only = false;
    std::uint64_t cap_flags[std::size(kCaps)] = {};

    std::uint64_t n = 0;
    std::string method = "valuation";
    std::string theorem;
    std::uint64_t from = 0;
    std::uint64_t to = 0;
    std::uint64_t step = 1;
    std::string bench_task;
    std::vector<std::uint64_t> ns;
    std::uint64_t reps = 5;
};

BigValueStyle style_of(const Options& o) {
    return o.digits_only ? BigValueStyle::kDigitsOnly : BigValueStyle::kFull;
}

int emit_value(std::ostream& out, const Options& o, std::uint64_t n, const Natural& value,
               const PrimePowerFactorization* factorization) {
    switch (o.format) {
        case Format::kPlain:
            out << natural_text(value, style_of(o)) << '\n';
            break;
        case Format::kJson: {
            nlohmann::json j;
            j["n"] = n;
            put_natural(j, "value", value, style_of(o));
            if (factorization) j["factorization"] = to_json(*factorization);
            out << j.dump() << '\n';
            break;
        }
        case Format::kCsv:
            out << (o.digits_only ? "n,value_digits\n" : "n,value\n");
            out << n << ',' << natural_text(value, style_of(o)) << '\n';
            break;
    }
    return kOk;
}

int cmd_lcm_range(std::ostream& out, const Options& o, const Limits& limits) {
    const PrimePowerFactorization f = lcm_range(o.n, limits);
    return emit_value(out, o, o.n, f.expand(limits), &f);
}

int cmd_row_lcm(std::ostream& out, const Options& o, const Limits& limits) {
    if (o.method == "naive") return emit_value(out, o, o.n, row_lcm_naive(o.n, limits), nullptr);
    if (o.method == "farhi") return emit_value(out, o, o.n, row_lcm_farhi(o.n, limits), nullptr);
    const PrimePowerFactorization f = row_lcm_valuation(o.n, limits);
    return emit_value(out, o, o.n, f.expand(limits), &f);
}

std::string plain_line(const IdentityReport& r, BigValueStyle style) {
    std::ostringstream s;
    s << theorem_label(r.theorem()) << " n=" << r.n();
    if (r.t()) s << " t=" << *r.t();
    s << " lhs=" << natural_text(r.lhs(), style) << " rhs=" << natural_text(r.rhs(), style) << ' '
      << (r.holds() ? "holds" : "FAILS");
    if (r.half_row_matches_full()) {
        s << " half_row=" << (*r.half_row_matches_full() ? "full_row" : "MISMATCH");
    }
    return s.str();
}

std::string plain_line(const EquivalenceChainReport& r, BigValueStyle style) {
    std::ostringstream s;
    s << "CHAIN n=" << r.n() << " q_nair=" << natural_text(r.q_nair(), style)
      << " q_thm4_rhs=" << natural_text(r.q_thm4_rhs(), style)
      << " q_thm3_lhs=" << natural_text(r.q_thm3_lhs(), style)
      << " q_range=" << natural_text(r.q_range(), style) << ' '
      << (r.all_equal() ? "all_equal" : "NOT_EQUAL");
    return s.str();
}

int cmd_verify(std::ostream& out, std::ostream& err, const Options& o, const Limits& limits) {
    std::string which = o.theorem;
    std::transform(which.begin(), which.end(), which.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });

    std::vector<TheoremId> theorems;
    bool chain = false;
    if (which == "all") {
        theorems = {TheoremId::T1, TheoremId::T2, TheoremId::T3, TheoremId::T4, TheoremId::T5,
                    TheoremId::Termwise};
        chain = true;
    } else if (which == "chain") {
        chain = true;
    } else if (auto id = parse_theorem(which)) {
        theorems = {*id};
    } else {
        err << "verify: unknown theorem '" << o.theorem << "'\n";
        return kUsageError;
    }
    if (o.from > o.to) throw DomainError("verify needs --from <= --to");
    if (chain && o.from == 0) throw DomainError("the equivalence chain is stated for n >= 1");
    for (TheoremId id : theorems) {
        if (o.from < theorem_min_n(id)) {
            throw DomainError(std::string(theorem_label(id)) + " is stated for n >= " +
                              std::to_string(theorem_min_n(id)));
        }
    }

    std::vector<IdentityReport> reports;
    for (TheoremId id : theorems) {
        auto batch = verify_range(id, o.from, o.to, limits);
        std::move(batch.begin(), batch.end(), std::back_inserter(reports));
    }
    std::vector<EquivalenceChainReport> chains;
    if (chain) chains = chain_range(o.from, o.to, limits);

    const BigValueStyle style = style_of(o);
    std::size_t failures = 0;
    for (const auto& r : reports) failures += r.all_checks_pass() ? 0 : 1;
    for (const auto& c : chains) failures += c.all_equal() ? 0 : 1;

    switch (o.format) {
        case Format::kPlain:
            for (const auto& r : reports) out << plain_line(r, style) << '\n';
            for (const auto& c : chains) out << plain_line(c, style) << '\n';
            break;
        case Format::kJson: {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& r : reports) arr.push_back(to_json(r, style));
            for (const auto& c : chains) arr.push_back(to_json(c, style));
            out << arr.dump() << '\n';
            break;
        }
        case Format::kCsv:
            out << verify_csv_header() << '\n';
            for (const auto& r : reports) out << to_csv(r, style) << '\n';
            for (const auto& c : chains) out << to_csv(c, style) << '\n';
            break;
    }
    if (failures != 0) {
        err << "verify: " << failures << " instance(s) failed\n";
        return kCheckFailed;
    }
    return kOk;
}

int cmd_bounds(std::ostream& out, std::ostream& err, const Options& o, const Limits& limits) {
    const auto table = psi_table(o.to, o.step, limits);
    std::size_t violations = 0;
    for (const auto& r : table) violations += r.required_bounds_hold() ? 0 : 1;

    switch (o.format) {
        case Format::kPlain:
            for (const auto& r : table) {
                out << "n=" << r.n << " digits=" << r.lcm_digits
                    << " 2^(n-1)<=L:" << (r.lower_2nm1_holds ? "yes" : "NO")
                    << " 2^n<=L:" << (r.lower_2n_holds ? "yes" : "no")
                    << (r.lower_2n_required() ? "" : "(informational)")
                    << " L<=3^n:" << (r.upper_3n_holds ? "yes" : "NO")
                    << " psi/n=" << format_ratio(r.psi_over_n) << '\n';
            }
            break;
        case Format::kJson: {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& r : table) arr.push_back(to_json(r));
            out << arr.dump() << '\n';
            break;
        }
        case Format::kCsv:
            out << bounds_csv_header() << '\n';
            for (const auto& r : table) out << to_csv(r) << '\n';
            break;
    }
    if (violations != 0) {
        err << "bounds: " << violations << " violation(s)\n";
        return kCheckFailed;
    }
    return kOk;
}

int cmd_bench(std::ostream& out, std::ostream& err, const Options& o, const Limits& limits) {
    const BenchRun run = o.bench_task == "row" ? bench_row_methods(o.ns, o.reps, limits)
                                               : bench_range_methods(o.ns, o.reps, limits);
    for (const auto& skip : run.infeasible) {
        err << "bench: method '" << skip.method << "' infeasible at n=" << skip.n << '\n';
    }
    switch (o.format) {
        case Format::kPlain:
            for (const auto& r : run.records) {
                out << task_label(r.task) << ' ' << r.method << " n=" << r.n << " reps=" << r.reps
                    << " median_ns=" << r.median_ns << " p90_ns=" << r.p90_ns
                    << " digits=" << r.digits << " verified=" << (r.verified ? "true" : "false")
                    << '\n';
            }
            break;
        case Format::kJson: {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& r : run.records) arr.push_back(to_json(r));
            out << arr.dump() << '\n';
            break;
        }
        case Format::kCsv:
            out << bench_csv_header() << '\n';
            for (const auto& r : run.records) out << to_csv(r) << '\n';
            break;
    }
    return kOk;
}

bool parse_u64(const std::string& text, std::uint64_t& value) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) return false;
    try {
        value = std::stoull(text);
    } catch (const std::out_of_range&) {
        return false;
    }
    return true;
}

}  // namespace

std::optional<std::string> process_env(const std::string& name) {
    if (const char* v = std::getenv(name.c_str())) return std::string(v);
    return std::nullopt;
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err,
        const EnvLookup& env) {
    CLI::App app{"Exact least common multiples of binomial-coefficient rows", "lcmbin"};
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    const std::map<std::string, Format> formats{
        {"plain", Format::kPlain}, {"json", Format::kJson}, {"csv", Format::kCsv}};
    app.add_option("--format", o.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_flag("--digits-only", o.digits_only, "Print digit counts instead of big integers");
    CLI::Option* cap_options[std::size(kCaps)];
    for (std::size_t i = 0; i < std::size(kCaps); ++i) {
        cap_options[i] = app.add_option(kCaps[i].flag, o.cap_flags[i],
                                        std::string(kCaps[i].help) + " (env " + kCaps[i].env + ")");
    }

    auto* range_cmd = app.add_subcommand("lcm-range", "lcm(1..N)");
    range_cmd->add_option("N", o.n)->required();

    auto* row_cmd = app.add_subcommand("row-lcm", "lcm(C(N,0), ..., C(N,N))");
    row_cmd->add_option("N", o.n)->required();
    row_cmd->add_option("--method", o.method)
        ->check(CLI::IsMember({"naive", "farhi", "valuation"}));

    auto* verify_cmd = app.add_subcommand("verify", "Check identities over a range of n");
    verify_cmd->add_option("--theorem", o.theorem, "1|2|3|4|5|termwise|chain|all")->required();
    verify_cmd->add_option("--from", o.from)->required();
    verify_cmd->add_option("--to", o.to)->required();

    auto* bounds_cmd = app.add_subcommand("bounds", "Bounds on lcm(1..n) and ln lcm(1..n)/n");
    bounds_cmd->add_option("--to", o.to)->required();
    bounds_cmd->add_option("--step", o.step)->check(CLI::PositiveNumber);

    auto* bench_cmd = app.add_subcommand("bench", "Time competing methods after attesting equality");
    bench_cmd->add_option("task", o.bench_task)->required()->check(CLI::IsMember({"row", "range"}));
    bench_cmd->add_option("--ns", o.ns)->required()->delimiter(',');
    bench_cmd->add_option("--reps", o.reps);

    for (auto* sub : {range_cmd, row_cmd, verify_cmd, bounds_cmd, bench_cmd}) sub->fallthrough();

    try {
        std::vector<std::string> reversed(argv.rbegin(), argv.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        err << app.help();
        return kUsageError;
    }

    Limits limits;
    for (std::size_t i = 0; i < std::size(kCaps); ++i) {
        if (auto value = env(kCaps[i].env)) {
            std::uint64_t parsed = 0;
            if (!parse_u64(*value, parsed)) {
                err << kCaps[i].env << ": not a nonnegative integer: '" << *value << "'\n";
                return kUsageError;
            }
            limits.*(kCaps[i].field) = parsed;
        }
        if (cap_options[i]->count() > 0) limits.*(kCaps[i].field) = o.cap_flags[i];
    }

    try {
        if (range_cmd->parsed()) return cmd_lcm_range(out, o, limits);
        if (row_cmd->parsed()) return cmd_row_lcm(out, o, limits);
        if (verify_cmd->parsed()) return cmd_verify(out, err, o, limits);
        if (bounds_cmd->parsed()) return cmd_bounds(out, err, o, limits);
        if (bench_cmd->parsed()) return cmd_bench(out, err, o, limits);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const ResourceError& e) {
        err << "resource cap: " << e.what() << '\n';
        return kResourceError;
    } catch (const ConsistencyError& e) {
        err << "internal consistency failure: " << e.what() << '\n';
        return kCheckFailed;
    }
    return kUsageError;
}

}  // namespace lcmbin::cli
