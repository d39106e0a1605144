#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace redlab {

struct BenchRow {
    std::string suite;
    std::uint64_t n = 0;      // item / job / element count
    std::uint64_t scale = 0;  // target, processing cap, or set size
    std::string mode;         // "serial" or "parallel"
    double wall_ms = 0.0;
    bool resource_limited = false;  // a guard tripped; the run continued
};

// "subset-sum-dp", "weighted-tardy-dp", "oracle", "avgfree-check".
const std::vector<std::string>& bench_suites();

// Runs one suite, or every suite for "all". Rows come out in a fixed order.
std::vector<BenchRow> run_bench(const std::string& suite);

std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace redlab
