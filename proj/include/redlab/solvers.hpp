#pragma once

#include <cstdint>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "redlab/instances.hpp"
#include "redlab/sched.hpp"

namespace redlab {

struct SubsetDecision {
    bool yes = false;
    std::vector<std::size_t> witness;  // item indices, meaningful iff yes
};

// Bellman dynamic program over a bit table of reachable sums; the table is
// advanced item by item with word-parallel shift-or, and a first-setter
// back-pointer per sum rebuilds a witness. Guards: the table must stay under
// ~10^9 bits, and witness mode additionally needs target < 2^26.
SubsetDecision solve_subset_sum_dp(const SubsetSumInstance& inst, bool want_witness = true);
SubsetDecision solve_subset_sum_dp_serial(const SubsetSumInstance& inst, bool want_witness = true);

// Exhaustive oracle, authoritative in tests. Guard: at most 26 items.
// Returns the witness with the numerically smallest index mask.
SubsetDecision brute_subset_sum(const SubsetSumInstance& inst);
SubsetDecision brute_subset_sum_serial(const SubsetSumInstance& inst);

// Exact decision for instances whose targets are far too wide for a bit
// table: depth-first over items in descending value order with suffix-sum
// pruning and memoized dead (position, remainder) states. Knows nothing
// about how the instance was built.
SubsetDecision solve_subset_sum_exact(const SubsetSumInstance& inst,
                                      std::uint64_t node_limit = std::uint64_t(1) << 26);

// Can this job set be entirely early on one machine? True iff the
// earliest-due-date order meets every due date.
bool feasible_early_set(const std::vector<std::pair<Nat, Nat>>& jobs);  // (p, d)

struct WeightedTardyResult {
    Nat min_tardy_weight;
    std::vector<std::size_t> early_set;  // EDD-feasible witness
};

// Lawler-Moore style dynamic program: jobs sorted by due date, table over
// early-set processing totals, maximizing early weight.
WeightedTardyResult solve_weighted_tardy_dp(const std::vector<std::tuple<Nat, Nat, Nat>>& jobs,
                                            bool want_witness = true);  // (p, d, w)

struct ScheduleWitness {
    // Per job: (machine, start time), or nullopt if rejected.
    std::vector<std::optional<std::pair<int, Nat>>> placement;
    std::vector<std::size_t> rejected;
};

struct ScheduleResult {
    bool yes = false;
    std::optional<ScheduleWitness> witness;
};

// Per-problem oracle over at most 12 jobs. Enumerates machine assignments /
// early sets / rejected sets with per-machine order canonicalized:
// earliest-due-date for tardiness objectives, release order for makespan
// with releases, class order for level-order. The canonical orders are
// validated against full permutation search in the test suite.
ScheduleResult brute_schedule(const SchedulingDecision& dec);

// Scalable route where one exists: the weighted-tardy DP answers 1-SumWjUj
// directly and the two rejection problems at threshold 0; everything else
// falls back to the oracle.
ScheduleResult solve_scheduling(const SchedulingDecision& dec, bool force_oracle = false);

// Independent check of a concrete schedule: machine validity, release dates,
// no overlap, level-order precedence, rejection budget, and the objective
// recomputed against the threshold.
bool verify_schedule(const SchedulingDecision& dec, const ScheduleWitness& witness);

}  // namespace redlab
