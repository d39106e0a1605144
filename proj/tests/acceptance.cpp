// Acceptance suite: runs each top-level correctness criterion at full scale
// and prints one pass/fail line per criterion. Exit code is the number of
// failed criteria.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <string>
#include <vector>

#include "redlab/avgfree.hpp"
#include "redlab/gen.hpp"
#include "redlab/io.hpp"
#include "redlab/or_merge.hpp"
#include "redlab/partition_gadget.hpp"
#include "redlab/rng.hpp"
#include "redlab/roundtrip.hpp"
#include "redlab/solvers.hpp"

using namespace redlab;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    double seconds = 0.0;
};

template <typename F>
Outcome timed(F&& f) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
        f(out);
    } catch (const std::exception& e) {
        out.pass = false;
        out.detail = std::string("exception: ") + e.what();
    }
    out.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

void note_failure(Outcome& out, const std::string& detail) {
    if (out.pass) {
        out.pass = false;
        out.detail = detail;
    }
}

void enforce_budget(Outcome& out, double start_elapsed, double budget_s, const char* what) {
    if (start_elapsed > budget_s)
        note_failure(out, std::string(what) + " exceeded its time budget");
}

double elapsed_s(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

GenSpec or_merge_spec(std::uint64_t seed) {
    SplitMix64 rng = child_rng(0x0cea11, seed);
    GenSpec spec;
    spec.seed = rng.next();
    spec.count = 1 + rng.below(4);   // N <= 4
    spec.max_items = 5;              // sizes <= 5
    spec.value_bound = 25;           // targets <= 25
    spec.planted = Planted::Random;
    return spec;
}

// ---- criterion 1: average-free construction -------------------------------

Outcome criterion_avgfree() {
    return timed([](Outcome& out) {
        const auto start = std::chrono::steady_clock::now();
        std::size_t checked = 0;
        for (unsigned m : {2u, 3u, 4u}) {
            for (std::size_t M = 1; M <= 64; ++M) {
                for (Rational eps : {Rational{3, 10}, Rational{1, 2}, Rational{9, 10}}) {
                    AvgFreeSet set = construct_avg_free(m, M, eps);
                    ++checked;
                    if (set.elements.size() != M) {
                        note_failure(out, "wrong size at m=" + std::to_string(m) +
                                              " M=" + std::to_string(M));
                        return;
                    }
                    AvgFreeCheck check = is_avg_free(set.elements, m);
                    if (!check.ok) {
                        note_failure(out, "checker found a violating tuple at m=" +
                                              std::to_string(m) + " M=" + std::to_string(M));
                        return;
                    }
                    if (!avg_free_bound_holds(m, M, eps, set.max_element())) {
                        note_failure(out, "value bound violated at m=" + std::to_string(m) +
                                              " M=" + std::to_string(M));
                        return;
                    }
                }
            }
        }
        enforce_budget(out, elapsed_s(start), 60.0, "criterion 1");
        if (out.pass)
            out.detail = std::to_string(checked) + " parameter triples";
    });
}

// ---- criterion 2: OR-merge equivalence ------------------------------------

Outcome criterion_or_merge() {
    return timed([](Outcome& out) {
        const auto start = std::chrono::steady_clock::now();
        const std::size_t trials = 500;
        std::atomic<std::size_t> failures{0};
        std::vector<std::string> details(trials);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (std::size_t t = 0; t < trials; ++t) {
            try {
                auto family = gen_subset_sum_family(or_merge_spec(t));
                bool expected = false;
                for (const auto& inst : family)
                    expected = expected || brute_subset_sum_serial(inst).yes;

                MergedInstance merged = merge(normalize_family(family));
                SubsetDecision got = solve_subset_sum_exact(merged.instance);
                bool ok = got.yes == expected;
                if (ok && got.yes) {
                    ExtractedWitness w = extract_witness(merged, got.witness);
                    Nat sum = 0;
                    for (std::size_t idx : w.item_indices)
                        sum += family[w.instance_index - 1].items[idx];
                    ok = sum == family[w.instance_index - 1].target;
                }
                if (!ok) {
                    details[t] = "trial " + std::to_string(t) + " disagreed";
                    ++failures;
                }
            } catch (const std::exception& e) {
                details[t] = "trial " + std::to_string(t) + ": " + e.what();
                ++failures;
            }
        }
        if (failures > 0) {
            auto first = std::find_if(details.begin(), details.end(),
                                      [](const std::string& s) { return !s.empty(); });
            note_failure(out, *first + " (" + std::to_string(failures.load()) + " total)");
            return;
        }
        enforce_budget(out, elapsed_s(start), 300.0, "criterion 2");
        if (out.pass)
            out.detail = std::to_string(trials) + " families, all agreed, witnesses re-verified";
    });
}

// ---- criterion 3: carry freedom and the size law ---------------------------

Outcome criterion_carry_freedom() {
    return timed([](Outcome& out) {
        const std::size_t trials = 500;
        std::atomic<std::size_t> failures{0};

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (std::size_t t = 0; t < trials; ++t) {
            try {
                auto family = gen_subset_sum_family(or_merge_spec(t));
                MergedInstance merged = merge(normalize_family(family));

                if (merged.instance.items.size() !=
                    family.size() * (2 * merged.n_prime + 1)) {
                    ++failures;
                    continue;
                }
                if (bit_length(merged.instance.target) > merged.layout.total_bits()) {
                    ++failures;
                    continue;
                }

                const auto& items = merged.instance.items;
                std::vector<BlockFields> fields;
                fields.reserve(items.size());
                for (const Nat& x : items)
                    fields.push_back(block_decompose(merged.layout, x));

                SplitMix64 rng = child_rng(0xcaf3, t);
                bool ok = true;
                for (int sample = 0; sample < 1000 && ok; ++sample) {
                    Nat total = 0, enc = 0, cnt = 0, ver = 0, flag = 0;
                    for (std::size_t i = 0; i < items.size(); ++i) {
                        if (!rng.coin())
                            continue;
                        total += items[i];
                        enc += fields[i].encoding;
                        cnt += fields[i].counting;
                        ver += fields[i].verification;
                        flag += fields[i].flag;
                    }
                    ExtendedSlices s = extended_slices(merged.layout, total);
                    ok = s.encoding == enc && s.counting == cnt && s.verification == ver &&
                         s.flag == flag;
                }
                if (!ok)
                    ++failures;
            } catch (const std::exception&) {
                ++failures;
            }
        }
        if (failures > 0)
            note_failure(out, std::to_string(failures.load()) + " of " + std::to_string(trials) +
                                  " merged instances violated additivity or the size law");
        else
            out.detail = "500 instances x 1000 subsets";
    });
}

// ---- criterion 4: partition gadget -----------------------------------------

Outcome criterion_partition_gadget() {
    return timed([](Outcome& out) {
        const auto start = std::chrono::steady_clock::now();
        const std::size_t trials = 500;
        std::size_t failures = 0;
        for (std::size_t t = 0; t < trials && failures == 0; ++t) {
            SplitMix64 rng = child_rng(0x9ad9e7, t);
            SubsetSumInstance inst;
            const std::size_t size = 1 + rng.below(10);
            for (std::size_t i = 0; i < size; ++i)
                inst.items.push_back(Nat(rng.below(51)));
            inst.target = Nat(rng.below(51));

            bool expected = brute_subset_sum_serial(inst).yes;
            try {
                PartitionInstance gadget = to_partition(inst);
                Nat sum = inst.item_sum();
                Nat gadget_sum = 0;
                for (const Nat& x : gadget.items)
                    gadget_sum += x;
                if (gadget.items.size() != inst.items.size() + 2 || gadget_sum != sum * 4 ||
                    gadget.target * 2 != gadget_sum) {
                    ++failures;
                    continue;
                }
                SubsetDecision got = brute_subset_sum_serial(gadget.as_subset_sum());
                if (got.yes != expected) {
                    ++failures;
                    continue;
                }
                if (got.yes) {
                    auto subset = partition_witness_to_subset(inst, got.witness);
                    Nat check = 0;
                    for (std::size_t idx : subset)
                        check += inst.items[idx];
                    if (check != inst.target)
                        ++failures;
                }
            } catch (const TrivialInstance& e) {
                if (e.answer != expected)
                    ++failures;
            }
        }
        if (failures > 0)
            note_failure(out, "gadget disagreed with the oracle");
        enforce_budget(out, elapsed_s(start), 60.0, "criterion 4");
        if (out.pass)
            out.detail = "500 instances, oracle equivalence and structure laws";
    });
}

// ---- criterion 5: the six scheduling reductions ----------------------------

Outcome criterion_sched() {
    return timed([](Outcome& out) {
        const auto start = std::chrono::steady_clock::now();
        struct Case {
            const char* name;
            SchedulingDecision (*apply)(const PartitionFamily&);
        };
        static const Case cases[] = {
            {"P2-levelorder-Cmax", [](const PartitionFamily& f) { return to_level_order(f); }},
            {"P2-Tmax",
             [](const PartitionFamily& f) { return to_p2_due_dates(f, DueObjective::Tmax); }},
            {"P2-SumUj",
             [](const PartitionFamily& f) { return to_p2_due_dates(f, DueObjective::SumUj); }},
            {"P2-rj-Cmax", [](const PartitionFamily& f) { return to_p2_release(f); }},
            {"1-SumWjUj", [](const PartitionFamily& f) { return to_single_weighted_tardy(f); }},
            {"1-Rej-SumUj",
             [](const PartitionFamily& f) { return to_single_rejection(f, DueObjective::SumUj); }},
            {"1-Rej-Tmax",
             [](const PartitionFamily& f) { return to_single_rejection(f, DueObjective::Tmax); }},
            {"1-rj-Rej-Cmax",
             [](const PartitionFamily& f) { return to_single_release_rejection(f); }},
        };

        const std::size_t trials = 200;
        for (const Case& c : cases) {
            std::atomic<std::size_t> failures{0};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
            for (std::size_t t = 0; t < trials; ++t) {
                try {
                    SplitMix64 rng = child_rng(0x5c4ed * (&c - cases + 1), t);
                    GenSpec spec;
                    spec.seed = rng.next();
                    spec.count = 1 + rng.below(3);  // N <= 3
                    spec.max_items = 4;             // s <= 4
                    spec.value_bound = 10;
                    spec.planted = Planted::Random;
                    PartitionFamily family = gen_partition_family(spec);

                    bool expected = true;
                    for (const auto& inst : family.instances)
                        expected = expected && brute_subset_sum_serial(inst.as_subset_sum()).yes;

                    SchedulingDecision dec = c.apply(family);
                    ScheduleResult got = brute_schedule(dec);
                    bool ok = got.yes == expected;
                    if (ok && got.yes)
                        ok = verify_schedule(dec, *got.witness);
                    if (!ok)
                        ++failures;
                } catch (const std::exception&) {
                    ++failures;
                }
            }
            if (failures > 0) {
                note_failure(out, std::string(c.name) + ": " + std::to_string(failures.load()) +
                                      " of " + std::to_string(trials) + " trials disagreed");
                return;
            }
        }
        enforce_budget(out, elapsed_s(start), 600.0, "criterion 5");
        if (out.pass)
            out.detail = "8 problems x 200 families";
    });
}

// ---- criterion 6: solver cross-checks ---------------------------------------

Outcome criterion_solvers() {
    return timed([](Outcome& out) {
        // DP vs oracle on 1000 random instances.
        for (std::size_t t = 0; t < 1000; ++t) {
            SplitMix64 rng = child_rng(0xd9, t);
            SubsetSumInstance inst;
            const std::size_t n = 1 + rng.below(12);
            for (std::size_t i = 0; i < n; ++i)
                inst.items.push_back(Nat(rng.below(101)));
            inst.target = Nat(rng.below(101));
            SubsetDecision dp = solve_subset_sum_dp(inst);
            SubsetDecision oracle = brute_subset_sum_serial(inst);
            if (dp.yes != oracle.yes) {
                note_failure(out, "subset-sum DP disagreed with the oracle at trial " +
                                      std::to_string(t));
                return;
            }
            if (dp.yes) {
                Nat sum = 0;
                for (std::size_t idx : dp.witness)
                    sum += inst.items[idx];
                if (sum != inst.target) {
                    note_failure(out, "DP witness does not re-sum");
                    return;
                }
            }
        }

        // Weighted-tardy DP vs the early-subset optimum on 500 instances.
        for (std::size_t t = 0; t < 500; ++t) {
            SplitMix64 rng = child_rng(0x7a2d, t);
            const std::size_t n = 1 + rng.below(8);
            std::vector<std::tuple<Nat, Nat, Nat>> jobs;
            for (std::size_t i = 0; i < n; ++i)
                jobs.emplace_back(Nat(1 + rng.below(10)), Nat(1 + rng.below(25)),
                                  Nat(1 + rng.below(10)));

            std::uint64_t total_w = 0, best_w = 0;
            for (const auto& [p, d, w] : jobs)
                total_w += to_u64(w).value();
            for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
                std::vector<std::pair<Nat, Nat>> early;
                std::uint64_t w_sum = 0;
                for (std::size_t i = 0; i < n; ++i)
                    if ((mask >> i) & 1) {
                        early.emplace_back(std::get<0>(jobs[i]), std::get<1>(jobs[i]));
                        w_sum += to_u64(std::get<2>(jobs[i])).value();
                    }
                if (feasible_early_set(early))
                    best_w = std::max(best_w, w_sum);
            }

            WeightedTardyResult dp = solve_weighted_tardy_dp(jobs);
            if (dp.min_tardy_weight != Nat(total_w - best_w)) {
                note_failure(out, "weighted-tardy DP missed the optimum at trial " +
                                      std::to_string(t));
                return;
            }
            std::vector<std::pair<Nat, Nat>> witness_jobs;
            for (std::size_t i : dp.early_set)
                witness_jobs.emplace_back(std::get<0>(jobs[i]), std::get<1>(jobs[i]));
            if (!feasible_early_set(witness_jobs)) {
                note_failure(out, "weighted-tardy witness is not EDD-feasible");
                return;
            }
        }

        // Canonical per-machine orders vs full permutation search, n <= 7.
        for (std::size_t t = 0; t < 200; ++t) {
            SplitMix64 rng = child_rng(0xedd, t);
            const std::size_t n = 1 + rng.below(7);
            std::vector<std::uint64_t> p(n), d(n), r(n);
            for (std::size_t i = 0; i < n; ++i) {
                p[i] = 1 + rng.below(8);
                d[i] = 1 + rng.below(24);
                r[i] = rng.below(20);
            }
            std::vector<std::size_t> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::uint64_t best_tmax = UINT64_MAX, best_cmax = UINT64_MAX;
            do {
                std::uint64_t cum = 0, tmax = 0, clock = 0;
                for (std::size_t i : perm) {
                    cum += p[i];
                    if (cum > d[i])
                        tmax = std::max(tmax, cum - d[i]);
                    clock = std::max(clock, r[i]) + p[i];
                }
                best_tmax = std::min(best_tmax, tmax);
                best_cmax = std::min(best_cmax, clock);
            } while (std::next_permutation(perm.begin(), perm.end()));

            std::vector<std::size_t> order(n);
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(),
                             [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });
            std::uint64_t cum = 0, edd_tmax = 0;
            for (std::size_t i : order) {
                cum += p[i];
                if (cum > d[i])
                    edd_tmax = std::max(edd_tmax, cum - d[i]);
            }
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(),
                             [&](std::size_t a, std::size_t b) { return r[a] < r[b]; });
            std::uint64_t clock = 0;
            for (std::size_t i : order)
                clock = std::max(clock, r[i]) + p[i];

            if (edd_tmax != best_tmax || clock != best_cmax) {
                note_failure(out, "canonical order beaten by a permutation at trial " +
                                      std::to_string(t));
                return;
            }
        }
        out.detail = "1000 subset-sum + 500 weighted-tardy + 200 order checks";
    });
}

// ---- criterion 7: determinism ----------------------------------------------

Outcome criterion_determinism() {
    return timed([](Outcome& out) {
        GenSpec spec;
        spec.seed = 987654321;
        spec.count = 3;
        spec.max_items = 5;
        spec.value_bound = 25;
        spec.planted = Planted::Random;

        auto fam1 = gen_subset_sum_family(spec);
        auto fam2 = gen_subset_sum_family(spec);
        if (io::dump(io::to_json(fam1)) != io::dump(io::to_json(fam2))) {
            note_failure(out, "subset-sum generation is not byte-stable");
            return;
        }
        GenSpec pspec = spec;
        pspec.planted = Planted::Yes;
        if (io::dump(io::to_json(gen_partition_family(pspec))) !=
            io::dump(io::to_json(gen_partition_family(pspec)))) {
            note_failure(out, "partition generation is not byte-stable");
            return;
        }

        MergedInstance m1 = merge(normalize_family(fam1));
        MergedInstance m2 = merge(normalize_family(fam2));
        if (io::dump(io::to_json(m1.instance)) != io::dump(io::to_json(m2.instance)) ||
            io::dump(io::provenance_to_json(m1)) != io::dump(io::provenance_to_json(m2))) {
            note_failure(out, "merge artifacts are not byte-stable");
            return;
        }

        AvgFreeSet s1 = construct_avg_free(3, 32, Rational{1, 2});
        AvgFreeSet s2 = construct_avg_free(3, 32, Rational{1, 2});
        if (s1.elements != s2.elements) {
            note_failure(out, "average-free construction is not deterministic");
            return;
        }

        for (const std::string& reduction : {std::string("or-merge"), std::string("to-p2-sumuj")}) {
            GenSpec rspec;
            rspec.seed = 1357;
            rspec.count = 2;
            rspec.max_items = 4;
            rspec.value_bound = 12;
            io::json a = io::report_to_json(round_trip(reduction, rspec, 50));
            io::json b = io::report_to_json(round_trip(reduction, rspec, 50));
            a.erase("timing");
            b.erase("timing");
            if (io::dump(a) != io::dump(b)) {
                note_failure(out, "roundtrip report for " + reduction + " is not byte-stable");
                return;
            }
        }
        out.detail = "families, merge artifacts, reports byte-identical across runs";
    });
}

}  // namespace

int main() {
    struct Line {
        const char* name;
        Outcome (*run)();
    };
    static const Line lines[] = {
        {"average-free correctness", criterion_avgfree},
        {"OR-merge equivalence", criterion_or_merge},
        {"carry freedom and size law", criterion_carry_freedom},
        {"partition gadget", criterion_partition_gadget},
        {"scheduling reductions", criterion_sched},
        {"solver cross-checks", criterion_solvers},
        {"determinism", criterion_determinism},
    };

    int failures = 0;
    for (std::size_t i = 0; i < std::size(lines); ++i) {
        Outcome o = lines[i].run();
        std::printf("criterion %zu (%s): %s (%.1f s)%s%s\n", i + 1, lines[i].name,
                    o.pass ? "PASS" : "FAIL", o.seconds, o.detail.empty() ? "" : " - ",
                    o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass)
            ++failures;
    }
    return failures;
}
