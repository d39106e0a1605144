#include "redlab/bench.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "redlab/avgfree.hpp"
#include "redlab/rng.hpp"
#include "redlab/solvers.hpp"

namespace redlab {

namespace {

template <typename F>
double time_ms(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

SubsetSumInstance dp_instance(std::uint64_t n, std::uint64_t target) {
    SplitMix64 rng(0x5eedu ^ target);
    SubsetSumInstance inst;
    inst.target = Nat(target);
    for (std::uint64_t i = 0; i < n; ++i)
        inst.items.push_back(Nat(rng.range(1, target)));
    return inst;
}

void bench_subset_sum_dp(std::vector<BenchRow>& rows) {
    const std::uint64_t n = 100;
    for (std::uint64_t t : {std::uint64_t(1000), std::uint64_t(10000), std::uint64_t(100000),
                            std::uint64_t(1000000), std::uint64_t(10000000)}) {
        SubsetSumInstance inst = dp_instance(n, t);
        double serial = time_ms([&] { solve_subset_sum_dp_serial(inst, false); });
        rows.push_back({"subset-sum-dp", n, t, "serial", serial, false});
        double parallel = time_ms([&] { solve_subset_sum_dp(inst, false); });
        rows.push_back({"subset-sum-dp", n, t, "parallel", parallel, false});
    }
}

void bench_weighted_tardy(std::vector<BenchRow>& rows) {
    const std::uint64_t n = 100;
    for (std::uint64_t cap : {std::uint64_t(10000), std::uint64_t(100000), std::uint64_t(1000000)}) {
        SplitMix64 rng(0xfeedu ^ cap);
        std::vector<std::tuple<Nat, Nat, Nat>> jobs;
        for (std::uint64_t i = 0; i < n; ++i) {
            std::uint64_t p = rng.range(1, std::max<std::uint64_t>(1, 2 * cap / n));
            std::uint64_t d = rng.range(1, cap);
            std::uint64_t w = rng.range(1, 100);
            jobs.emplace_back(Nat(p), Nat(d), Nat(w));
        }
        double ms = time_ms([&] { solve_weighted_tardy_dp(jobs, false); });
        rows.push_back({"weighted-tardy-dp", n, cap, "serial", ms, false});
    }
}

void bench_oracle(std::vector<BenchRow>& rows) {
    for (std::uint64_t n : {std::uint64_t(20), std::uint64_t(22), std::uint64_t(24),
                            std::uint64_t(28)}) {
        SplitMix64 rng(0xacceu ^ n);
        SubsetSumInstance inst;
        Nat sum = 0;
        for (std::uint64_t i = 0; i < n; ++i) {
            inst.items.push_back(Nat(rng.range(1, 1'000'000'000)));
            sum += inst.items.back();
        }
        // An (almost surely) unreachable target forces a full scan.
        inst.target = (sum >> 1) + 1;
        for (const char* mode : {"serial", "parallel"}) {
            BenchRow row{"oracle", n, 0, mode, 0.0, false};
            try {
                row.wall_ms = time_ms([&] {
                    if (row.mode == "serial")
                        brute_subset_sum_serial(inst);
                    else
                        brute_subset_sum(inst);
                });
            } catch (const TooLarge&) {
                row.resource_limited = true;  // beyond the 26-item guard
            }
            rows.push_back(std::move(row));
        }
    }
}

void bench_avgfree(std::vector<BenchRow>& rows) {
    for (std::size_t size : {std::size_t(64), std::size_t(128), std::size_t(256)}) {
        AvgFreeSet set = construct_avg_free(3, size, Rational{1, 2});
        double serial = time_ms([&] { is_avg_free_serial(set.elements, set.m); });
        rows.push_back({"avgfree-check", size, 3, "serial", serial, false});
        double parallel = time_ms([&] { is_avg_free(set.elements, set.m); });
        rows.push_back({"avgfree-check", size, 3, "parallel", parallel, false});
    }
}

}  // namespace

const std::vector<std::string>& bench_suites() {
    static const std::vector<std::string> suites = {"subset-sum-dp", "weighted-tardy-dp",
                                                    "oracle", "avgfree-check"};
    return suites;
}

std::vector<BenchRow> run_bench(const std::string& suite) {
    const auto& suites = bench_suites();
    const bool all = suite == "all";
    if (!all && std::find(suites.begin(), suites.end(), suite) == suites.end())
        throw Error("unknown bench suite \"" + suite + "\"");
    std::vector<BenchRow> rows;
    if (all || suite == "subset-sum-dp")
        bench_subset_sum_dp(rows);
    if (all || suite == "weighted-tardy-dp")
        bench_weighted_tardy(rows);
    if (all || suite == "oracle")
        bench_oracle(rows);
    if (all || suite == "avgfree-check")
        bench_avgfree(rows);
    return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "suite,n,scale,mode,wall_ms,resource_limited\n";
    for (const BenchRow& r : rows)
        out << r.suite << ',' << r.n << ',' << r.scale << ',' << r.mode << ',' << r.wall_ms << ','
            << (r.resource_limited ? "yes" : "no") << '\n';
    return out.str();
}

}  // namespace redlab
