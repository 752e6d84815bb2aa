#include "lcmbin/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "lcmbin/errors.hpp"
#include "lcmbin/lcm.hpp"

namespace lcmbin {

std::string_view task_label(BenchTask task) {
    return task == BenchTask::RowLcm ? "ROW_LCM" : "RANGE_LCM";
}

std::vector<BenchMethod> row_bench_methods(const Limits& limits) {
    return {
        {"naive", limits.max_row, [limits](std::uint64_t n) { return row_lcm_naive(n, limits); }},
        {"farhi", limits.max_factorization,
         [limits](std::uint64_t n) { return row_lcm_farhi(n, limits); }},
        {"valuation", limits.max_factorization,
         [limits](std::uint64_t n) { return row_lcm_valuation(n, limits).expand(limits); }},
    };
}

std::vector<BenchMethod> range_bench_methods(const Limits& limits) {
    return {
        {"factorization", limits.max_factorization,
         [limits](std::uint64_t n) { return lcm_range(n, limits).expand(limits); }},
        {"fold", limits.max_fold_range, [limits](std::uint64_t n) { return lcm_range_fold(n, limits); }},
    };
}

BenchMethod row_reference_method(const Limits& limits) {
    return {"valuation-serial", limits.max_factorization,
            [limits](std::uint64_t n) { return row_lcm_valuation_serial(n, limits).expand(limits); }};
}

BenchMethod range_reference_method(const Limits& limits) {
    return {"factorization-serial", limits.max_factorization,
            [limits](std::uint64_t n) { return lcm_range_serial(n, limits).expand(limits); }};
}

std::uint64_t percentile_ns(std::vector<std::uint64_t> samples, double q) {
    if (samples.empty()) throw DomainError("percentile of no samples");
    std::sort(samples.begin(), samples.end());
    auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(samples.size())));
    rank = std::clamp<std::size_t>(rank, 1, samples.size());
    return samples[rank - 1];
}

BenchRun run_bench(BenchTask task, std::span<const BenchMethod> methods, const BenchMethod& reference,
                   std::span<const std::uint64_t> ns, std::uint64_t reps, std::uint64_t warmup) {
    if (reps < 3) throw DomainError("bench needs reps >= 3");
    if (warmup < 1) throw DomainError("bench needs at least one warm-up run");

    BenchRun run;
    struct Planned {
        const BenchMethod* method;
        std::uint64_t n;
        std::uint64_t digits;
    };
    std::vector<Planned> plan;

    // Attestation: nothing is timed until every n has agreeing outputs.
    for (std::uint64_t n : ns) {
        std::vector<const BenchMethod*> feasible;
        for (const BenchMethod& m : methods) {
            if (n <= m.max_n) {
                feasible.push_back(&m);
            } else {
                run.infeasible.push_back({m.label, n});
            }
        }
        if (feasible.empty()) continue;

        std::vector<const BenchMethod*> witnesses = feasible;
        if (witnesses.size() < 2 && n <= reference.max_n) witnesses.push_back(&reference);
        if (witnesses.size() < 2) {
            throw ConsistencyError("cannot attest " + std::string(task_label(task)) + " at n=" +
                                   std::to_string(n) + ": fewer than two feasible methods");
        }

        const Natural expected = witnesses.front()->compute(n);
        for (std::size_t i = 1; i < witnesses.size(); ++i) {
            if (witnesses[i]->compute(n) != expected) {
                throw ConsistencyError(std::string(task_label(task)) + " methods '" +
                                       witnesses.front()->label + "' and '" + witnesses[i]->label +
                                       "' disagree at n=" + std::to_string(n));
            }
        }
        const std::uint64_t digits = decimal_digits(expected);
        for (const BenchMethod* m : feasible) plan.push_back({m, n, digits});
    }

    using Clock = std::chrono::steady_clock;
    for (const Planned& p : plan) {
        for (std::uint64_t i = 0; i < warmup; ++i) (void)p.method->compute(p.n);
        std::vector<std::uint64_t> samples;
        samples.reserve(reps);
        for (std::uint64_t i = 0; i < reps; ++i) {
            const auto start = Clock::now();
            const Natural out = p.method->compute(p.n);
            const auto stop = Clock::now();
            samples.push_back(static_cast<std::uint64_t>(
                std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()));
        }
        BenchRecord r;
        r.task = task;
        r.method = p.method->label;
        r.n = p.n;
        r.reps = reps;
        r.median_ns = percentile_ns(samples, 0.5);
        r.p90_ns = percentile_ns(samples, 0.9);
        r.digits = p.digits;
        r.verified = true;
        run.records.push_back(std::move(r));
    }
    return run;
}

BenchRun bench_row_methods(std::span<const std::uint64_t> ns, std::uint64_t reps, const Limits& limits) {
    const auto methods = row_bench_methods(limits);
    return run_bench(BenchTask::RowLcm, methods, row_reference_method(limits), ns, reps);
}

BenchRun bench_range_methods(std::span<const std::uint64_t> ns, std::uint64_t reps,
                             const Limits& limits) {
    const auto methods = range_bench_methods(limits);
    return run_bench(BenchTask::RangeLcm, methods, range_reference_method(limits), ns, reps);
}

}  // namespace lcmbin
