#include <algorithm>
#include <bit>
#include <numeric>

#include "redlab/solvers.hpp"

namespace redlab {

namespace {

constexpr std::size_t kMaxJobs = 12;

struct OracleInput {
    std::size_t n = 0;
    std::uint64_t tau = 0;
    std::uint64_t budget = 0;
    std::vector<std::uint64_t> p, d, r, w;
    std::vector<std::size_t> cls;
    std::vector<std::size_t> by_d;  // stable EDD order
    std::vector<std::size_t> by_r;  // stable release order
};

bool needs_due(Problem prob) {
    switch (prob) {
        case Problem::P2Tmax:
        case Problem::P2SumUj:
        case Problem::OneSumWjUj:
        case Problem::OneRejSumUj:
        case Problem::OneRejTmax:
            return true;
        default:
            return false;
    }
}

bool needs_release(Problem prob) {
    return prob == Problem::P2RjCmax || prob == Problem::OneRjRejCmax;
}

bool needs_weight(Problem prob) {
    return prob == Problem::OneSumWjUj || has_rejection(prob);
}

OracleInput prepare(const SchedulingDecision& dec) {
    if (dec.jobs.size() > kMaxJobs)
        throw TooLarge("scheduling oracle handles at most 12 jobs");
    OracleInput in;
    in.n = dec.jobs.size();
    in.tau = to_u64_or_throw(dec.threshold, "threshold");
    if (has_rejection(dec.problem)) {
        if (!dec.rejection_budget)
            throw Error("rejection problem without a rejection budget");
        in.budget = to_u64_or_throw(*dec.rejection_budget, "rejection budget");
    }
    for (const Job& j : dec.jobs) {
        in.p.push_back(to_u64_or_throw(j.p, "processing time"));
        if (needs_due(dec.problem)) {
            if (!j.d)
                throw Error("job is missing its due date");
            in.d.push_back(to_u64_or_throw(*j.d, "due date"));
        }
        if (needs_release(dec.problem)) {
            if (!j.r)
                throw Error("job is missing its release date");
            in.r.push_back(to_u64_or_throw(*j.r, "release date"));
        }
        if (needs_weight(dec.problem)) {
            if (!j.w)
                throw Error("job is missing its weight");
            in.w.push_back(to_u64_or_throw(*j.w, "weight"));
        }
        if (dec.problem == Problem::P2LevelOrderCmax) {
            if (!j.class_index)
                throw Error("job is missing its level-order class");
            in.cls.push_back(*j.class_index);
        }
    }
    if (!in.d.empty()) {
        in.by_d.resize(in.n);
        std::iota(in.by_d.begin(), in.by_d.end(), 0);
        std::stable_sort(in.by_d.begin(), in.by_d.end(),
                         [&](std::size_t a, std::size_t b) { return in.d[a] < in.d[b]; });
    }
    if (!in.r.empty()) {
        in.by_r.resize(in.n);
        std::iota(in.by_r.begin(), in.by_r.end(), 0);
        std::stable_sort(in.by_r.begin(), in.by_r.end(),
                         [&](std::size_t a, std::size_t b) { return in.r[a] < in.r[b]; });
    }
    return in;
}

// Max tardiness of mask's jobs run back to back from time 0 in EDD order.
std::vector<std::uint64_t> table_edd_tmax(const OracleInput& in) {
    std::vector<std::uint64_t> out(std::size_t(1) << in.n, 0);
    for (std::size_t mask = 1; mask < out.size(); ++mask) {
        std::uint64_t cum = 0, tmax = 0;
        for (std::size_t idx : in.by_d) {
            if (!((mask >> idx) & 1))
                continue;
            cum += in.p[idx];
            if (cum > in.d[idx])
                tmax = std::max(tmax, cum - in.d[idx]);
        }
        out[mask] = tmax;
    }
    return out;
}

// Makespan of mask's jobs under the release-order greedy on one machine.
std::vector<std::uint64_t> table_erd_cmax(const OracleInput& in) {
    std::vector<std::uint64_t> out(std::size_t(1) << in.n, 0);
    for (std::size_t mask = 1; mask < out.size(); ++mask) {
        std::uint64_t clock = 0;
        for (std::size_t idx : in.by_r) {
            if (!((mask >> idx) & 1))
                continue;
            clock = std::max(clock, in.r[idx]) + in.p[idx];
        }
        out[mask] = clock;
    }
    return out;
}

struct EarlyTables {
    // Size of a largest all-early-feasible subset of mask, and one witness.
    std::vector<unsigned> max_early;
    std::vector<std::size_t> arg_early;
};

EarlyTables table_max_early(const OracleInput& in, const std::vector<std::uint64_t>& tmax) {
    EarlyTables t;
    const std::size_t total = std::size_t(1) << in.n;
    t.max_early.assign(total, 0);
    t.arg_early.assign(total, 0);
    for (std::size_t mask = 1; mask < total; ++mask) {
        if (tmax[mask] == 0) {
            t.max_early[mask] = static_cast<unsigned>(std::popcount(mask));
            t.arg_early[mask] = mask;
            continue;
        }
        for (std::size_t m = mask; m;) {
            std::size_t b = m & (~m + 1);
            m ^= b;
            if (t.max_early[mask ^ b] > t.max_early[mask]) {
                t.max_early[mask] = t.max_early[mask ^ b];
                t.arg_early[mask] = t.arg_early[mask ^ b];
            }
        }
    }
    return t;
}

std::vector<std::uint64_t> subset_weight(const OracleInput& in,
                                         const std::vector<std::uint64_t>& value) {
    std::vector<std::uint64_t> out(std::size_t(1) << in.n, 0);
    for (std::size_t mask = 1; mask < out.size(); ++mask) {
        std::size_t b = mask & (~mask + 1);
        out[mask] = out[mask ^ b] + value[std::countr_zero(mask)];
    }
    return out;
}

ScheduleWitness blank_witness(std::size_t n) {
    ScheduleWitness w;
    w.placement.assign(n, std::nullopt);
    return w;
}

// Early jobs first in EDD order, then the rest, also in EDD order. Keeps
// every member of `early` early and is how a single machine meets a
// tardy-count or tardy-weight bound.
void place_early_first(const OracleInput& in, std::size_t machine_mask, std::size_t early,
                       int machine, ScheduleWitness& w) {
    Nat clock = 0;
    for (std::size_t idx : in.by_d)
        if ((early >> idx) & 1) {
            w.placement[idx] = std::make_pair(machine, clock);
            clock += in.p[idx];
        }
    for (std::size_t idx : in.by_d)
        if (((machine_mask >> idx) & 1) && !((early >> idx) & 1)) {
            w.placement[idx] = std::make_pair(machine, clock);
            clock += in.p[idx];
        }
}

void place_edd(const OracleInput& in, std::size_t machine_mask, int machine, ScheduleWitness& w) {
    place_early_first(in, machine_mask, machine_mask, machine, w);
}

void place_release_greedy(const OracleInput& in, std::size_t machine_mask, int machine,
                          ScheduleWitness& w) {
    std::uint64_t clock = 0;
    for (std::size_t idx : in.by_r) {
        if (!((machine_mask >> idx) & 1))
            continue;
        clock = std::max(clock, in.r[idx]);
        w.placement[idx] = std::make_pair(machine, Nat(clock));
        clock += in.p[idx];
    }
}

ScheduleResult oracle_level_order(const OracleInput& in) {
    std::vector<std::size_t> classes = in.cls;
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());

    const std::size_t total = std::size_t(1) << in.n;
    for (std::size_t assign = 0; assign < total; ++assign) {
        std::uint64_t makespan = 0;
        for (std::size_t c : classes) {
            std::uint64_t load0 = 0, load1 = 0;
            for (std::size_t j = 0; j < in.n; ++j) {
                if (in.cls[j] != c)
                    continue;
                ((assign >> j) & 1 ? load1 : load0) += in.p[j];
            }
            makespan += std::max(load0, load1);
        }
        if (makespan > in.tau)
            continue;

        ScheduleWitness w = blank_witness(in.n);
        std::uint64_t class_start = 0;
        for (std::size_t c : classes) {
            std::uint64_t clock0 = class_start, clock1 = class_start;
            for (std::size_t j = 0; j < in.n; ++j) {
                if (in.cls[j] != c)
                    continue;
                std::uint64_t& clock = ((assign >> j) & 1) ? clock1 : clock0;
                w.placement[j] = std::make_pair(int((assign >> j) & 1), Nat(clock));
                clock += in.p[j];
            }
            class_start = std::max(clock0, clock1);
        }
        return {true, std::move(w)};
    }
    return {};
}

ScheduleResult oracle_p2(const OracleInput& in, Problem prob) {
    const std::size_t total = std::size_t(1) << in.n;
    const std::size_t full = total - 1;

    std::vector<std::uint64_t> tmax, cmax;
    EarlyTables early;
    if (prob == Problem::P2Tmax || prob == Problem::P2SumUj)
        tmax = table_edd_tmax(in);
    if (prob == Problem::P2SumUj)
        early = table_max_early(in, tmax);
    if (prob == Problem::P2RjCmax)
        cmax = table_erd_cmax(in);

    for (std::size_t a = 0; a < total; ++a) {
        const std::size_t b = full & ~a;
        ScheduleWitness w = blank_witness(in.n);
        switch (prob) {
            case Problem::P2Tmax:
                if (std::max(tmax[a], tmax[b]) > in.tau)
                    continue;
                place_edd(in, a, 0, w);
                place_edd(in, b, 1, w);
                break;
            case Problem::P2SumUj: {
                const std::uint64_t tardy =
                    (std::popcount(a) - early.max_early[a]) + (std::popcount(b) - early.max_early[b]);
                if (tardy > in.tau)
                    continue;
                place_early_first(in, a, early.arg_early[a], 0, w);
                place_early_first(in, b, early.arg_early[b], 1, w);
                break;
            }
            case Problem::P2RjCmax:
                if (std::max(cmax[a], cmax[b]) > in.tau)
                    continue;
                place_release_greedy(in, a, 0, w);
                place_release_greedy(in, b, 1, w);
                break;
            default:
                throw Error("not a two-machine problem");
        }
        return {true, std::move(w)};
    }
    return {};
}

ScheduleResult oracle_single(const OracleInput& in, Problem prob) {
    const std::size_t total = std::size_t(1) << in.n;
    const std::size_t full = total - 1;

    std::vector<std::uint64_t> tmax, cmax, wsum;
    EarlyTables early;
    if (prob != Problem::OneRjRejCmax)
        tmax = table_edd_tmax(in);
    if (prob == Problem::OneRejSumUj)
        early = table_max_early(in, tmax);
    if (prob == Problem::OneRjRejCmax)
        cmax = table_erd_cmax(in);
    wsum = subset_weight(in, in.w);

    if (prob == Problem::OneSumWjUj) {
        // Enumerate the early set; tardy weight is everything else.
        for (std::size_t e = 0; e < total; ++e) {
            if (tmax[e] != 0)
                continue;
            if (wsum[full] - wsum[e] > in.tau)
                continue;
            ScheduleWitness w = blank_witness(in.n);
            place_early_first(in, full, e, 0, w);
            return {true, std::move(w)};
        }
        return {};
    }

    for (std::size_t rej = 0; rej < total; ++rej) {
        if (wsum[rej] > in.budget)
            continue;
        const std::size_t rest = full & ~rej;
        ScheduleWitness w = blank_witness(in.n);
        switch (prob) {
            case Problem::OneRejSumUj: {
                const std::uint64_t tardy = std::popcount(rest) - early.max_early[rest];
                if (tardy > in.tau)
                    continue;
                place_early_first(in, rest, early.arg_early[rest], 0, w);
                break;
            }
            case Problem::OneRejTmax:
                if (tmax[rest] > in.tau)
                    continue;
                place_edd(in, rest, 0, w);
                break;
            case Problem::OneRjRejCmax:
                if (cmax[rest] > in.tau)
                    continue;
                place_release_greedy(in, rest, 0, w);
                break;
            default:
                throw Error("not a single-machine rejection problem");
        }
        for (std::size_t j = 0; j < in.n; ++j)
            if ((rej >> j) & 1)
                w.rejected.push_back(j);
        return {true, std::move(w)};
    }
    return {};
}

}  // namespace

ScheduleResult brute_schedule(const SchedulingDecision& dec) {
    OracleInput in = prepare(dec);
    switch (dec.problem) {
        case Problem::P2LevelOrderCmax:
            return oracle_level_order(in);
        case Problem::P2Tmax:
        case Problem::P2SumUj:
        case Problem::P2RjCmax:
            return oracle_p2(in, dec.problem);
        default:
            return oracle_single(in, dec.problem);
    }
}

bool verify_schedule(const SchedulingDecision& dec, const ScheduleWitness& witness) {
    const std::size_t n = dec.jobs.size();
    if (witness.placement.size() != n)
        return false;

    std::vector<bool> rejected(n, false);
    for (std::size_t idx : witness.rejected) {
        if (idx >= n || rejected[idx])
            return false;
        rejected[idx] = true;
    }
    if (!witness.rejected.empty() && !has_rejection(dec.problem))
        return false;

    const int machines = is_two_machine(dec.problem) ? 2 : 1;
    std::vector<std::vector<std::size_t>> per_machine(machines);
    for (std::size_t j = 0; j < n; ++j) {
        if (rejected[j]) {
            if (witness.placement[j])
                return false;
            continue;
        }
        if (!witness.placement[j])
            return false;
        const auto& [machine, start] = *witness.placement[j];
        if (machine < 0 || machine >= machines)
            return false;
        if (dec.jobs[j].r && start < *dec.jobs[j].r)
            return false;
        per_machine[machine].push_back(j);
    }

    // Rejection budget.
    if (has_rejection(dec.problem)) {
        if (!dec.rejection_budget)
            return false;
        Nat spent = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (rejected[j]) {
                if (!dec.jobs[j].w)
                    return false;
                spent += *dec.jobs[j].w;
            }
        if (spent > *dec.rejection_budget)
            return false;
    }

    // No overlap on any machine.
    for (auto& jobs : per_machine) {
        std::sort(jobs.begin(), jobs.end(), [&](std::size_t a, std::size_t b) {
            return witness.placement[a]->second < witness.placement[b]->second;
        });
        Nat prev_end = 0;
        for (std::size_t j : jobs) {
            if (witness.placement[j]->second < prev_end)
                return false;
            prev_end = witness.placement[j]->second + dec.jobs[j].p;
        }
    }

    // Level-order precedence: a job may start only after every job of every
    // lower class has completed.
    if (dec.problem == Problem::P2LevelOrderCmax) {
        std::vector<std::pair<std::size_t, std::size_t>> by_class;  // (class, job)
        for (std::size_t j = 0; j < n; ++j) {
            if (!dec.jobs[j].class_index)
                return false;
            by_class.emplace_back(*dec.jobs[j].class_index, j);
        }
        std::sort(by_class.begin(), by_class.end());
        Nat lower_completion = 0;  // max completion over all lower classes
        std::size_t i = 0;
        while (i < by_class.size()) {
            std::size_t c = by_class[i].first;
            Nat class_completion = lower_completion;
            for (; i < by_class.size() && by_class[i].first == c; ++i) {
                std::size_t j = by_class[i].second;
                if (witness.placement[j]->second < lower_completion)
                    return false;
                Nat completion = witness.placement[j]->second + dec.jobs[j].p;
                class_completion = std::max(class_completion, completion);
            }
            lower_completion = class_completion;
        }
    }

    // Objective against the threshold.
    Nat cmax = 0, tmax = 0, tardy_count = 0, tardy_weight = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (rejected[j])
            continue;
        Nat completion = witness.placement[j]->second + dec.jobs[j].p;
        cmax = std::max(cmax, completion);
        if (dec.jobs[j].d && completion > *dec.jobs[j].d) {
            Nat tardiness = completion - *dec.jobs[j].d;
            tmax = std::max(tmax, tardiness);
            tardy_count += 1;
            if (dec.jobs[j].w)
                tardy_weight += *dec.jobs[j].w;
        }
    }
    switch (dec.problem) {
        case Problem::P2LevelOrderCmax:
        case Problem::P2RjCmax:
        case Problem::OneRjRejCmax:
            return cmax <= dec.threshold;
        case Problem::P2Tmax:
        case Problem::OneRejTmax:
            return tmax <= dec.threshold;
        case Problem::P2SumUj:
        case Problem::OneRejSumUj:
            return tardy_count <= dec.threshold;
        case Problem::OneSumWjUj:
            return tardy_weight <= dec.threshold;
    }
    return false;
}

}  // namespace redlab
