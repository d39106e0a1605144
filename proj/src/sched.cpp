#include "redlab/sched.hpp"

#include <array>

namespace redlab {

namespace {

constexpr std::array<std::pair<Problem, const char*>, 8> kTags = {{
    {Problem::P2LevelOrderCmax, "P2-levelorder-Cmax"},
    {Problem::P2Tmax, "P2-Tmax"},
    {Problem::P2SumUj, "P2-SumUj"},
    {Problem::P2RjCmax, "P2-rj-Cmax"},
    {Problem::OneSumWjUj, "1-SumWjUj"},
    {Problem::OneRejSumUj, "1-Rej-SumUj"},
    {Problem::OneRejTmax, "1-Rej-Tmax"},
    {Problem::OneRjRejCmax, "1-rj-Rej-Cmax"},
}};

}  // namespace

const char* problem_tag(Problem p) {
    for (const auto& [prob, tag] : kTags)
        if (prob == p)
            return tag;
    return "?";
}

std::optional<Problem> problem_from_tag(const std::string& tag) {
    for (const auto& [prob, t] : kTags)
        if (tag == t)
            return prob;
    return std::nullopt;
}

const std::vector<Problem>& all_problems() {
    static const std::vector<Problem> all = [] {
        std::vector<Problem> v;
        for (const auto& [prob, tag] : kTags)
            v.push_back(prob);
        return v;
    }();
    return all;
}

bool is_two_machine(Problem p) {
    switch (p) {
        case Problem::P2LevelOrderCmax:
        case Problem::P2Tmax:
        case Problem::P2SumUj:
        case Problem::P2RjCmax:
            return true;
        default:
            return false;
    }
}

bool has_rejection(Problem p) {
    switch (p) {
        case Problem::OneRejSumUj:
        case Problem::OneRejTmax:
        case Problem::OneRjRejCmax:
            return true;
        default:
            return false;
    }
}

PartitionFamily PartitionFamily::make(std::vector<PartitionInstance> instances) {
    if (instances.empty())
        throw InvalidFamily("a partition family needs at least one instance");
    for (const auto& inst : instances) {
        Nat sum = 0;
        for (const Nat& x : inst.items)
            sum += x;
        if (inst.target * 2 != sum)
            throw InvalidFamily("family member violates the half-sum invariant");
    }
    PartitionFamily f;
    f.instances = std::move(instances);
    return f;
}

namespace {

Nat target_sum(const PartitionFamily& family) {
    Nat s = 0;
    for (const auto& inst : family.instances)
        s += inst.target;
    return s;
}

}  // namespace

SchedulingDecision to_level_order(const PartitionFamily& family) {
    SchedulingDecision dec;
    dec.problem = Problem::P2LevelOrderCmax;
    for (std::size_t i = 0; i < family.instances.size(); ++i) {
        for (const Nat& x : family.instances[i].items) {
            Job job;
            job.p = x;
            job.class_index = i + 1;
            dec.jobs.push_back(std::move(job));
        }
    }
    // Each class fits its window of length t_i exactly when it splits evenly
    // over the two machines, so the family is all-yes iff makespan sum(t_i)
    // is reachable.
    dec.threshold = target_sum(family);
    return dec;
}

SchedulingDecision to_p2_due_dates(const PartitionFamily& family, DueObjective objective) {
    SchedulingDecision dec;
    dec.problem = objective == DueObjective::Tmax ? Problem::P2Tmax : Problem::P2SumUj;
    Nat due = 0;
    for (const auto& inst : family.instances) {
        due += inst.target;  // prefix sum t_1 + ... + t_i
        for (const Nat& x : inst.items) {
            Job job;
            job.p = x;
            job.d = due;
            dec.jobs.push_back(std::move(job));
        }
    }
    dec.threshold = 0;  // all jobs early
    return dec;
}

SchedulingDecision to_p2_release(const PartitionFamily& family) {
    SchedulingDecision dec;
    dec.problem = Problem::P2RjCmax;
    Nat release = 0;
    for (const auto& inst : family.instances) {
        for (const Nat& x : inst.items) {
            Job job;
            job.p = x;
            job.r = release;  // prefix sum t_1 + ... + t_(i-1)
            dec.jobs.push_back(std::move(job));
        }
        release += inst.target;
    }
    dec.threshold = target_sum(family);
    return dec;
}

SchedulingDecision to_single_weighted_tardy(const PartitionFamily& family) {
    SchedulingDecision dec;
    dec.problem = Problem::OneSumWjUj;
    const std::size_t N = family.instances.size();
    Nat due = 0;
    Nat budget = 0;
    for (std::size_t i = 0; i < N; ++i) {
        const auto& inst = family.instances[i];
        const Nat multiplier = Nat(N - i);  // N - i + 1 with 1-based i
        due += inst.target;
        for (const Nat& x : inst.items) {
            Job job;
            job.p = x;
            job.d = due;
            job.w = multiplier * x;
            dec.jobs.push_back(std::move(job));
        }
        budget += multiplier * inst.target;
    }
    // Weights total 2*budget; meeting the budget forces every class to put
    // exactly a half-sum early.
    dec.threshold = budget;
    return dec;
}

SchedulingDecision to_single_rejection(const PartitionFamily& family, DueObjective objective) {
    SchedulingDecision weighted = to_single_weighted_tardy(family);
    SchedulingDecision dec;
    dec.problem = objective == DueObjective::Tmax ? Problem::OneRejTmax : Problem::OneRejSumUj;
    dec.jobs = std::move(weighted.jobs);
    // Rejecting weight up to the tardy-weight budget and scheduling the rest
    // early is the same question as the weighted-tardy decision.
    dec.rejection_budget = std::move(weighted.threshold);
    dec.threshold = 0;
    return dec;
}

SchedulingDecision to_single_release_rejection(const PartitionFamily& family) {
    SchedulingDecision dec;
    dec.problem = Problem::OneRjRejCmax;
    Nat release = 0;
    Nat budget = 0;
    for (std::size_t i = 0; i < family.instances.size(); ++i) {
        const auto& inst = family.instances[i];
        const Nat multiplier = Nat(i + 1);
        for (const Nat& x : inst.items) {
            Job job;
            job.p = x;
            job.r = release;
            job.w = multiplier * x;
            dec.jobs.push_back(std::move(job));
        }
        release += inst.target;
        budget += multiplier * inst.target;
    }
    dec.threshold = release;  // sum of all targets
    dec.rejection_budget = budget;
    return dec;
}

}  // namespace redlab
