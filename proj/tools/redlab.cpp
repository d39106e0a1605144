#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "redlab/bench.hpp"
#include "redlab/io.hpp"
#include "redlab/or_merge.hpp"
#include "redlab/partition_gadget.hpp"
#include "redlab/roundtrip.hpp"
#include "redlab/solvers.hpp"

namespace {

using redlab::io::json;

void emit(const std::string& out_path, const json& j) {
    if (out_path.empty())
        std::cout << redlab::io::dump(j);
    else
        redlab::io::write_file(out_path, j);
}

void emit_text(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out)
            throw redlab::Error("cannot write " + out_path);
        out << text;
    }
}

redlab::Planted parse_planted(const std::string& s) {
    if (s == "yes")
        return redlab::Planted::Yes;
    if (s == "no")
        return redlab::Planted::No;
    if (s == "random")
        return redlab::Planted::Random;
    throw CLI::ValidationError("--planted must be yes, no or random");
}

json witness_json(const redlab::SubsetDecision& d) {
    json j;
    j["yes"] = d.yes;
    if (d.yes)
        j["witness"] = d.witness;
    return j;
}

json witness_json(const redlab::ScheduleResult& r, const redlab::SchedulingDecision& dec) {
    json j;
    j["yes"] = r.yes;
    if (r.yes && r.witness) {
        json placements = json::array();
        for (std::size_t i = 0; i < r.witness->placement.size(); ++i) {
            json e;
            e["job"] = i;
            if (r.witness->placement[i]) {
                e["machine"] = r.witness->placement[i]->first;
                e["start"] = redlab::to_decimal(r.witness->placement[i]->second);
            } else {
                e["rejected"] = true;
            }
            placements.push_back(std::move(e));
        }
        j["schedule"] = std::move(placements);
        j["verified"] = redlab::verify_schedule(dec, *r.witness);
    }
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Construct, solve and stress-test subset-sum, partition and "
                 "scheduling reductions"};
    app.require_subcommand(1);
    app.fallthrough();  // lets --out appear after the subcommand

    std::string out_path;
    app.add_option("--out", out_path, "Write output here instead of stdout")->capture_default_str();

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "Generate an instance family");
    std::string gen_kind = "subset-sum";
    redlab::GenSpec gen_spec;
    std::string gen_planted = "random", gen_bound = "10";
    gen_cmd->add_option("--kind", gen_kind, "subset-sum or partition")
        ->check(CLI::IsMember({"subset-sum", "partition"}));
    gen_cmd->add_option("--seed", gen_spec.seed, "Generator seed");
    gen_cmd->add_option("--count", gen_spec.count, "Number of instances (N)");
    gen_cmd->add_option("--max-items", gen_spec.max_items, "Max items per instance (s)");
    gen_cmd->add_option("--value-bound", gen_bound, "Largest drawn value (decimal)");
    gen_cmd->add_option("--planted", gen_planted, "yes, no or random");

    // avgfree
    auto* avg_cmd = app.add_subcommand("avgfree", "Construct an m-average-free set");
    unsigned avg_m = 2;
    std::size_t avg_size = 8;
    std::string avg_eps = "0.5";
    bool avg_check = false;
    avg_cmd->add_option("--m", avg_m, "Average order m >= 2");
    avg_cmd->add_option("--size", avg_size, "Requested set size");
    avg_cmd->add_option("--eps", avg_eps, "Size/value trade-off in (0,1)");
    avg_cmd->add_flag("--check", avg_check, "Re-verify with the exhaustive checker");

    // merge
    auto* merge_cmd = app.add_subcommand("merge", "Merge a subset-sum family into one instance");
    std::string merge_in, merge_prov, merge_eps = "0.5";
    merge_cmd->add_option("--in", merge_in, "subset-sum-family file")->required();
    merge_cmd->add_option("--provenance", merge_prov, "Sidecar path (default: <out>.provenance.json)");
    merge_cmd->add_option("--eps", merge_eps, "Average-free construction knob");

    // to-partition
    auto* part_cmd = app.add_subcommand("to-partition", "Subset-sum instance to partition gadget");
    std::string part_in;
    part_cmd->add_option("--in", part_in, "subset-sum file")->required();

    // to-sched
    auto* sched_cmd = app.add_subcommand("to-sched", "Partition family to a scheduling decision");
    std::string sched_in, sched_problem;
    sched_cmd->add_option("--in", sched_in, "partition-family file")->required();
    sched_cmd->add_option("--problem", sched_problem, "Problem tag")->required();

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "Decide an instance and print a witness");
    std::string solve_in, solve_problem = "subset-sum", solve_prov;
    bool solve_oracle = false;
    solve_cmd->add_option("--in", solve_in, "Instance file")->required();
    solve_cmd->add_option("--problem", solve_problem,
                          "subset-sum, partition, or a scheduling problem tag");
    solve_cmd->add_flag("--oracle", solve_oracle, "Force the brute-force oracle");
    solve_cmd->add_option("--provenance", solve_prov,
                          "Merge sidecar; maps a yes-witness back to its source instance");

    // roundtrip
    auto* rt_cmd = app.add_subcommand("roundtrip", "Oracle-equivalence trials for one reduction");
    std::string rt_name;
    redlab::GenSpec rt_spec;
    std::string rt_planted = "random", rt_bound = "10";
    std::size_t rt_trials = 100;
    rt_cmd->add_option("--reduction", rt_name, "Reduction name")->required();
    rt_cmd->add_option("--seed", rt_spec.seed, "Generator seed");
    rt_cmd->add_option("--trials", rt_trials, "Trial count");
    rt_cmd->add_option("--count", rt_spec.count, "Instances per family");
    rt_cmd->add_option("--max-items", rt_spec.max_items, "Max items per instance");
    rt_cmd->add_option("--value-bound", rt_bound, "Largest drawn value");
    rt_cmd->add_option("--planted", rt_planted, "yes, no or random");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "Scaling ladders, serial vs parallel kernels");
    std::string bench_suite = "all";
    bench_cmd->add_option("--suite", bench_suite, "all or one suite name");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (*gen_cmd) {
            gen_spec.planted = parse_planted(gen_planted);
            gen_spec.value_bound = redlab::parse_nat(gen_bound);
            if (gen_kind == "subset-sum")
                emit(out_path, redlab::io::to_json(redlab::gen_subset_sum_family(gen_spec)));
            else
                emit(out_path, redlab::io::to_json(redlab::gen_partition_family(gen_spec)));
        } else if (*avg_cmd) {
            redlab::AvgFreeSet set =
                redlab::construct_avg_free(avg_m, avg_size, redlab::parse_rational(avg_eps));
            std::string lines;
            for (const auto& e : set.elements)
                lines += redlab::to_decimal(e) + "\n";
            emit_text(out_path, lines);
            if (avg_check) {
                redlab::AvgFreeCheck check = redlab::is_avg_free(set.elements, set.m);
                if (!check.ok) {
                    std::cerr << "violation found (internal error)\n";
                    return 1;
                }
                std::cerr << "average-free property verified for m = " << set.m << "\n";
            }
        } else if (*merge_cmd) {
            auto family = redlab::io::subset_sum_family_from_json(redlab::io::read_file(merge_in));
            redlab::MergedInstance merged;
            try {
                merged = redlab::merge(redlab::normalize_family(family),
                                       redlab::parse_rational(merge_eps));
            } catch (const redlab::DegenerateTarget& e) {
                json j;
                j["trivial"] = "yes";
                j["instance"] = e.instance_index;
                emit(out_path, j);
                return 0;
            }
            emit(out_path, redlab::io::to_json(merged.instance));
            std::string prov = merge_prov.empty()
                                   ? (out_path.empty() ? std::string("provenance.json")
                                                       : out_path + ".provenance.json")
                                   : merge_prov;
            redlab::io::write_file(prov, redlab::io::provenance_to_json(merged));
        } else if (*part_cmd) {
            auto inst = redlab::io::subset_sum_from_json(redlab::io::read_file(part_in));
            try {
                emit(out_path, redlab::io::to_json(redlab::to_partition(inst)));
            } catch (const redlab::TrivialInstance& e) {
                json j;
                j["trivial"] = e.answer ? "yes" : "no";
                emit(out_path, j);
            }
        } else if (*sched_cmd) {
            auto family = redlab::io::partition_family_from_json(redlab::io::read_file(sched_in));
            auto prob = redlab::problem_from_tag(sched_problem);
            if (!prob)
                throw redlab::Error("unknown problem tag \"" + sched_problem + "\"");
            redlab::SchedulingDecision dec;
            switch (*prob) {
                case redlab::Problem::P2LevelOrderCmax:
                    dec = redlab::to_level_order(family);
                    break;
                case redlab::Problem::P2Tmax:
                    dec = redlab::to_p2_due_dates(family, redlab::DueObjective::Tmax);
                    break;
                case redlab::Problem::P2SumUj:
                    dec = redlab::to_p2_due_dates(family, redlab::DueObjective::SumUj);
                    break;
                case redlab::Problem::P2RjCmax:
                    dec = redlab::to_p2_release(family);
                    break;
                case redlab::Problem::OneSumWjUj:
                    dec = redlab::to_single_weighted_tardy(family);
                    break;
                case redlab::Problem::OneRejSumUj:
                    dec = redlab::to_single_rejection(family, redlab::DueObjective::SumUj);
                    break;
                case redlab::Problem::OneRejTmax:
                    dec = redlab::to_single_rejection(family, redlab::DueObjective::Tmax);
                    break;
                case redlab::Problem::OneRjRejCmax:
                    dec = redlab::to_single_release_rejection(family);
                    break;
            }
            emit(out_path, redlab::io::to_json(dec));
        } else if (*solve_cmd) {
            if (solve_problem == "subset-sum" || solve_problem == "partition") {
                redlab::SubsetSumInstance inst;
                if (solve_problem == "partition")
                    inst = redlab::io::partition_from_json(redlab::io::read_file(solve_in))
                               .as_subset_sum();
                else
                    inst = redlab::io::subset_sum_from_json(redlab::io::read_file(solve_in));
                redlab::SubsetDecision d;
                if (solve_oracle) {
                    d = redlab::brute_subset_sum(inst);
                } else {
                    try {
                        d = redlab::solve_subset_sum_dp(inst);
                    } catch (const redlab::ResourceLimit&) {
                        // Target too wide for the bit table; the pruned exact
                        // search handles block-encoded instances.
                        d = redlab::solve_subset_sum_exact(inst);
                    }
                }
                json j = witness_json(d);
                if (!solve_prov.empty() && d.yes) {
                    redlab::MergedInstance merged = redlab::io::merged_from_json(
                        redlab::io::read_file(solve_in), redlab::io::read_file(solve_prov));
                    redlab::ExtractedWitness w = redlab::extract_witness(merged, d.witness);
                    json src;
                    src["instance"] = w.instance_index;
                    src["item_indices"] = w.item_indices;
                    json vals = json::array();
                    for (const auto& v : w.items)
                        vals.push_back(redlab::to_decimal(v));
                    src["items"] = std::move(vals);
                    j["source_witness"] = std::move(src);
                }
                emit(out_path, j);
            } else {
                auto dec = redlab::io::scheduling_from_json(redlab::io::read_file(solve_in));
                if (redlab::problem_tag(dec.problem) != solve_problem)
                    throw redlab::Error("file problem tag does not match --problem");
                auto r = redlab::solve_scheduling(dec, solve_oracle);
                emit(out_path, witness_json(r, dec));
            }
        } else if (*rt_cmd) {
            rt_spec.planted = parse_planted(rt_planted);
            rt_spec.value_bound = redlab::parse_nat(rt_bound);
            redlab::RoundTripReport report = redlab::round_trip(rt_name, rt_spec, rt_trials);
            emit(out_path, redlab::io::report_to_json(report));
            if (!report.passed()) {
                std::cerr << report.reduction << ": " << report.agreements << "/" << report.trials
                          << " trials agreed\n";
                return 1;
            }
        } else if (*bench_cmd) {
            emit_text(out_path, redlab::bench_csv(redlab::run_bench(bench_suite)));
        }
    } catch (const redlab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
