#pragma once

#include <optional>
#include <string>
#include <vector>

#include "redlab/gen.hpp"

namespace redlab {

struct RoundTripReport {
    std::string reduction;
    std::size_t trials = 0;
    std::size_t agreements = 0;
    std::optional<std::size_t> counterexample_trial;
    std::string counterexample;  // serialized family; empty when all agreed
    double wall_ms = 0.0;        // excluded from determinism comparisons

    bool passed() const { return agreements == trials; }
};

// "or-merge", "to-partition", "to-level-order", "to-p2-tmax", "to-p2-sumuj",
// "to-p2-rj-cmax", "to-1-sumwjuj", "to-1-rej-sumuj", "to-1-rej-tmax",
// "to-1-rj-rej-cmax".
const std::vector<std::string>& reduction_names();

// Generates a fresh family per trial (seed derived from spec.seed and the
// trial index), applies the reduction, decides both sides with the exact
// solvers and compares. Trials may run on a worker pool; the report is
// aggregated in trial order.
RoundTripReport round_trip(const std::string& reduction, const GenSpec& spec, std::size_t trials);

}  // namespace redlab
