#include <doctest.h>

#include "lcmbin/bench.hpp"
#include "lcmbin/errors.hpp"
#include "lcmbin/lcm.hpp"

using namespace lcmbin;

TEST_CASE("percentile_ns nearest rank") {
    CHECK(percentile_ns({5, 1, 3}, 0.5) == 3);
    CHECK(percentile_ns({5, 1, 3}, 0.9) == 5);
    CHECK(percentile_ns({4, 1, 3, 2}, 0.5) == 2);
    CHECK(percentile_ns({10, 20, 30, 40, 50, 60, 70, 80, 90, 100}, 0.9) == 90);
    CHECK_THROWS_AS(percentile_ns({}, 0.5), DomainError);
}

TEST_CASE("row bench at tiny n gives three verified records") {
    const std::vector<std::uint64_t> ns{4};
    const BenchRun run = bench_row_methods(ns, 3);
    REQUIRE(run.records.size() == 3);
    CHECK(run.infeasible.empty());
    CHECK(run.records[0].method == "naive");
    CHECK(run.records[1].method == "farhi");
    CHECK(run.records[2].method == "valuation");
    for (const auto& r : run.records) {
        CHECK(r.verified);
        CHECK(r.task == BenchTask::RowLcm);
        CHECK(r.reps == 3);
        CHECK(r.digits == 2);  // 12
        CHECK(r.median_ns <= r.p90_ns);
    }
}

TEST_CASE("row bench drops naive above its cap") {
    Limits limits;
    limits.max_row = 50;
    const std::vector<std::uint64_t> ns{40, 200};
    const BenchRun run = bench_row_methods(ns, 3, limits);
    CHECK(run.records.size() == 5);
    REQUIRE(run.infeasible.size() == 1);
    CHECK(run.infeasible[0].method == "naive");
    CHECK(run.infeasible[0].n == 200);
}

TEST_CASE("range bench") {
    const std::vector<std::uint64_t> ns{10};
    BenchRun run = bench_range_methods(ns, 3);
    REQUIRE(run.records.size() == 2);
    for (const auto& r : run.records) {
        CHECK(r.verified);
        CHECK(r.digits == 4);  // 2520
    }

    // Only the factorization method is feasible; the serial reference attests.
    Limits limits;
    limits.max_fold_range = 100;
    const std::vector<std::uint64_t> big{5000};
    run = bench_range_methods(big, 3, limits);
    REQUIRE(run.records.size() == 1);
    CHECK(run.records[0].method == "factorization");
    CHECK(run.infeasible.size() == 1);
}

TEST_CASE("bench rejects fewer than three reps") {
    const std::vector<std::uint64_t> ns{4};
    CHECK_THROWS_AS(bench_row_methods(ns, 2), DomainError);
}

TEST_CASE("fault injection: a corrupted method aborts before any timing") {
    int timed_calls = 0;
    std::vector<BenchMethod> methods = row_bench_methods();
    // Corrupt farhi at one n only; count every call so we can see nothing was timed.
    methods[1].compute = [&timed_calls](std::uint64_t n) {
        ++timed_calls;
        Natural v = row_lcm_farhi(n);
        if (n == 30) v += 1;
        return v;
    };
    const std::vector<std::uint64_t> ns{10, 20, 30};
    BenchRun run;
    CHECK_THROWS_AS(run = run_bench(BenchTask::RowLcm, methods, row_reference_method(), ns, 3),
                    ConsistencyError);
    CHECK(run.records.empty());
    // One attestation call per n, and no warm-up or timed calls.
    CHECK(timed_calls == 3);
}

TEST_CASE("attestation needs a second witness") {
    std::vector<BenchMethod> methods{{"only", 100, [](std::uint64_t n) { return row_lcm_farhi(n); }}};
    const BenchMethod no_reference{"none", 0, [](std::uint64_t) { return Natural(1); }};
    const std::vector<std::uint64_t> ns{10};
    CHECK_THROWS_AS(run_bench(BenchTask::RowLcm, methods, no_reference, ns, 3), ConsistencyError);
}
