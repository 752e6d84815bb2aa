// Serial reference kernels vs their OpenMP versions. Outputs are compared
// before timing; run on an otherwise idle machine.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include <omp.h>

#include "lcmbin/bench.hpp"
#include "lcmbin/lcm.hpp"

using namespace lcmbin;

namespace {

std::uint64_t time_ns(const std::function<void()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(
                                          std::chrono::steady_clock::now() - start)
                                          .count());
}

template <typename Kernel>
void compare(const char* name, Kernel serial, Kernel parallel, std::uint64_t n, int reps) {
    if (serial(n) != parallel(n)) {
        std::fprintf(stderr, "%s: serial and parallel differ at n=%llu\n", name,
                     static_cast<unsigned long long>(n));
        std::exit(1);
    }
    for (auto [label, kernel] : {std::pair{"serial", serial}, std::pair{"openmp", parallel}}) {
        (void)kernel(n);
        std::vector<std::uint64_t> samples;
        for (int i = 0; i < reps; ++i) samples.push_back(time_ns([&] { (void)kernel(n); }));
        std::printf("%-18s %-7s n=%-8llu threads=%-3d median_ns=%-12llu p90_ns=%llu\n", name, label,
                    static_cast<unsigned long long>(n), omp_get_max_threads(),
                    static_cast<unsigned long long>(percentile_ns(samples, 0.5)),
                    static_cast<unsigned long long>(percentile_ns(samples, 0.9)));
    }
}

}  // namespace

int main(int argc, char** argv) {
    const int reps = argc > 1 ? std::atoi(argv[1]) : 5;
    using Kernel = PrimePowerFactorization (*)(std::uint64_t, const Limits&);
    auto bind = [](Kernel k) { return [k](std::uint64_t n) { return k(n, Limits::defaults()); }; };

    for (std::uint64_t n : {10'000ULL, 100'000ULL, 1'000'000ULL}) {
        compare("lcm_range", std::function(bind(&lcm_range_serial)), std::function(bind(&lcm_range)), n, reps);
    }
    for (std::uint64_t n : {1'000ULL, 5'000ULL, 20'000ULL}) {
        compare("row_lcm_valuation", std::function(bind(&row_lcm_valuation_serial)),
                std::function(bind(&row_lcm_valuation)), n, reps);
    }
    return 0;
}
