#include "redlab/roundtrip.hpp"

#include <algorithm>
#include <chrono>

#include "redlab/io.hpp"
#include "redlab/or_merge.hpp"
#include "redlab/partition_gadget.hpp"
#include "redlab/rng.hpp"
#include "redlab/solvers.hpp"

namespace redlab {

namespace {

struct TrialResult {
    bool agreed = true;
    std::string detail;
};

SchedulingDecision apply_sched_reduction(const std::string& name, const PartitionFamily& family) {
    if (name == "to-level-order")
        return to_level_order(family);
    if (name == "to-p2-tmax")
        return to_p2_due_dates(family, DueObjective::Tmax);
    if (name == "to-p2-sumuj")
        return to_p2_due_dates(family, DueObjective::SumUj);
    if (name == "to-p2-rj-cmax")
        return to_p2_release(family);
    if (name == "to-1-sumwjuj")
        return to_single_weighted_tardy(family);
    if (name == "to-1-rej-sumuj")
        return to_single_rejection(family, DueObjective::SumUj);
    if (name == "to-1-rej-tmax")
        return to_single_rejection(family, DueObjective::Tmax);
    if (name == "to-1-rj-rej-cmax")
        return to_single_release_rejection(family);
    throw Error("unknown reduction \"" + name + "\"");
}

TrialResult trial_or_merge(const GenSpec& spec) {
    auto family = gen_subset_sum_family(spec);
    bool any_yes = false;
    for (const auto& inst : family)
        any_yes = any_yes || brute_subset_sum_serial(inst).yes;

    MergedInstance merged = merge(normalize_family(family));
    SubsetDecision rhs = solve_subset_sum_exact(merged.instance);

    bool ok = (any_yes == rhs.yes);
    if (ok && rhs.yes) {
        try {
            ExtractedWitness w = extract_witness(merged, rhs.witness);
            Nat sum = 0;
            for (std::size_t idx : w.item_indices)
                sum += family[w.instance_index - 1].items[idx];
            ok = (sum == family[w.instance_index - 1].target);
        } catch (const Error&) {
            ok = false;
        }
    }
    if (!ok)
        return {false, io::dump(io::to_json(family))};
    return {};
}

TrialResult trial_to_partition(const GenSpec& spec) {
    auto family = gen_subset_sum_family(spec);
    for (const auto& inst : family) {
        bool lhs = brute_subset_sum_serial(inst).yes;
        bool rhs = false;
        try {
            PartitionInstance gadget = to_partition(inst);
            rhs = brute_subset_sum_serial(gadget.as_subset_sum()).yes;
        } catch (const TrivialInstance& e) {
            rhs = e.answer;
        }
        if (lhs != rhs)
            return {false, io::dump(io::to_json(family))};
    }
    return {};
}

TrialResult trial_sched(const std::string& name, const GenSpec& spec) {
    PartitionFamily family = gen_partition_family(spec);
    bool all_yes = true;
    for (const auto& inst : family.instances)
        all_yes = all_yes && brute_subset_sum_serial(inst.as_subset_sum()).yes;

    SchedulingDecision dec = apply_sched_reduction(name, family);
    ScheduleResult rhs = brute_schedule(dec);
    bool ok = (all_yes == rhs.yes);
    if (ok && rhs.yes)
        ok = verify_schedule(dec, *rhs.witness);
    if (!ok)
        return {false, io::dump(io::to_json(family))};
    return {};
}

}  // namespace

const std::vector<std::string>& reduction_names() {
    static const std::vector<std::string> names = {
        "or-merge",       "to-partition",   "to-level-order",   "to-p2-tmax",
        "to-p2-sumuj",    "to-p2-rj-cmax",  "to-1-sumwjuj",     "to-1-rej-sumuj",
        "to-1-rej-tmax",  "to-1-rj-rej-cmax",
    };
    return names;
}

RoundTripReport round_trip(const std::string& reduction, const GenSpec& spec,
                           std::size_t trials) {
    const auto& names = reduction_names();
    if (std::find(names.begin(), names.end(), reduction) == names.end())
        throw Error("unknown reduction \"" + reduction + "\"");

    const auto started = std::chrono::steady_clock::now();
    std::vector<TrialResult> results(trials);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t i = 0; i < trials; ++i) {
        GenSpec trial_spec = spec;
        trial_spec.seed = child_rng(spec.seed, i).next();
        TrialResult r;
        try {
            if (reduction == "or-merge")
                r = trial_or_merge(trial_spec);
            else if (reduction == "to-partition")
                r = trial_to_partition(trial_spec);
            else
                r = trial_sched(reduction, trial_spec);
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        results[i] = std::move(r);
    }

    RoundTripReport report;
    report.reduction = reduction;
    report.trials = trials;
    for (std::size_t i = 0; i < trials; ++i) {
        if (results[i].agreed) {
            ++report.agreements;
        } else if (!report.counterexample_trial) {
            report.counterexample_trial = i;
            report.counterexample = results[i].detail;
        }
    }
    report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                               started)
                         .count();
    return report;
}

}  // namespace redlab
