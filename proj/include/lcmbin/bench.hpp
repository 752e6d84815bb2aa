#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lcmbin/limits.hpp"
#include "lcmbin/natural.hpp"

namespace lcmbin {

enum class BenchTask { RowLcm, RangeLcm };

std::string_view task_label(BenchTask task);

struct BenchRecord {
    BenchTask task = BenchTask::RowLcm;
    std::string method;
    std::uint64_t n = 0;
    std::uint64_t median_ns = 0;
    std::uint64_t p90_ns = 0;
    std::uint64_t reps = 0;
    std::uint64_t digits = 0;
    bool verified = false;
};

/// A competing implementation of one task. max_n is its feasibility cap.
struct BenchMethod {
    std::string label;
    std::uint64_t max_n = 0;
    std::function<Natural(std::uint64_t)> compute;
};

struct InfeasibleEntry {
    std::string method;
    std::uint64_t n = 0;
};

struct BenchRun {
    std::vector<BenchRecord> records;
    std::vector<InfeasibleEntry> infeasible;
};

/// naive (capped at limits.max_row), farhi, valuation.
std::vector<BenchMethod> row_bench_methods(const Limits& limits = Limits::defaults());
/// factorization, fold (capped at limits.max_fold_range).
std::vector<BenchMethod> range_bench_methods(const Limits& limits = Limits::defaults());
/// Serial reference kernels, used for attestation only when fewer than two
/// timed methods are feasible at some n.
BenchMethod row_reference_method(const Limits& limits = Limits::defaults());
BenchMethod range_reference_method(const Limits& limits = Limits::defaults());

/// Two phases. First every (n, feasible method) is computed once and all
/// outputs for the same n are compared; any mismatch throws ConsistencyError
/// before a single timing is taken. Then each (method, n) is timed: `warmup`
/// discarded runs, then `reps` samples. reps < 3 is a DomainError.
BenchRun run_bench(BenchTask task, std::span<const BenchMethod> methods,
                   const BenchMethod& reference, std::span<const std::uint64_t> ns,
                   std::uint64_t reps, std::uint64_t warmup = 1);

BenchRun bench_row_methods(std::span<const std::uint64_t> ns, std::uint64_t reps,
                           const Limits& limits = Limits::defaults());
BenchRun bench_range_methods(std::span<const std::uint64_t> ns, std::uint64_t reps,
                             const Limits& limits = Limits::defaults());

/// Nearest-rank percentile (0 < q <= 1) of unsorted samples.
std::uint64_t percentile_ns(std::vector<std::uint64_t> samples, double q);

}  // namespace lcmbin
