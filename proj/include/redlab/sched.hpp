#pragma once

#include <optional>
#include <string>
#include <vector>

#include "redlab/instances.hpp"

namespace redlab {

struct Job {
    Nat p;                                   // processing time
    std::optional<Nat> d;                    // due date
    std::optional<Nat> r;                    // release date
    std::optional<Nat> w;                    // weight
    std::optional<std::size_t> class_index;  // 1-based level-order class
};

enum class Problem {
    P2LevelOrderCmax,
    P2Tmax,
    P2SumUj,
    P2RjCmax,
    OneSumWjUj,
    OneRejSumUj,
    OneRejTmax,
    OneRjRejCmax,
};

// The wire/CLI tags: "P2-levelorder-Cmax", "P2-Tmax", "P2-SumUj",
// "P2-rj-Cmax", "1-SumWjUj", "1-Rej-SumUj", "1-Rej-Tmax", "1-rj-Rej-Cmax".
const char* problem_tag(Problem p);
std::optional<Problem> problem_from_tag(const std::string& tag);
const std::vector<Problem>& all_problems();

bool is_two_machine(Problem p);
bool has_rejection(Problem p);

// Decision form of a scheduling question: is there a feasible schedule with
// objective <= threshold, rejecting jobs of total weight <= rejection_budget
// where rejection is allowed?
struct SchedulingDecision {
    Problem problem = Problem::P2SumUj;
    std::vector<Job> jobs;
    Nat threshold;
    std::optional<Nat> rejection_budget;
};

// Ordered list of Partition instances; the order matters because due dates
// and release dates are prefix sums of the targets.
struct PartitionFamily {
    std::vector<PartitionInstance> instances;

    static PartitionFamily make(std::vector<PartitionInstance> instances);
};

enum class DueObjective { Tmax, SumUj };

// The six reductions. Each is a deterministic formula application whose
// output decision equals the AND of the family's Partition answers.
SchedulingDecision to_level_order(const PartitionFamily& family);
SchedulingDecision to_p2_due_dates(const PartitionFamily& family, DueObjective objective);
SchedulingDecision to_p2_release(const PartitionFamily& family);
SchedulingDecision to_single_weighted_tardy(const PartitionFamily& family);
SchedulingDecision to_single_rejection(const PartitionFamily& family, DueObjective objective);
SchedulingDecision to_single_release_rejection(const PartitionFamily& family);

}  // namespace redlab
