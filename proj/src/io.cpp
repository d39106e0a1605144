#include "redlab/io.hpp"

#include <fstream>
#include <sstream>

namespace redlab::io {

namespace {

json nat_array(const std::vector<Nat>& values) {
    json arr = json::array();
    for (const Nat& v : values)
        arr.push_back(to_decimal(v));
    return arr;
}

std::vector<Nat> nat_array_from(const json& arr, const char* what) {
    if (!arr.is_array())
        throw Error(std::string(what) + " must be an array of decimal strings");
    std::vector<Nat> out;
    out.reserve(arr.size());
    for (const auto& v : arr) {
        if (!v.is_string())
            throw Error(std::string(what) + " entries must be decimal strings");
        out.push_back(parse_nat(v.get<std::string>()));
    }
    return out;
}

Nat nat_field(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string())
        throw Error(std::string("missing decimal-string field \"") + key + "\"");
    return parse_nat(j[key].get<std::string>());
}

void expect_kind(const json& j, const char* kind) {
    if (!j.is_object() || !j.contains("kind") || j["kind"] != kind)
        throw Error(std::string("expected a document of kind \"") + kind + "\"");
}

}  // namespace

json to_json(const SubsetSumInstance& inst) {
    json j;
    j["kind"] = "subset-sum";
    j["items"] = nat_array(inst.items);
    j["target"] = to_decimal(inst.target);
    return j;
}

SubsetSumInstance subset_sum_from_json(const json& j) {
    expect_kind(j, "subset-sum");
    SubsetSumInstance inst;
    inst.items = nat_array_from(j.at("items"), "items");
    inst.target = nat_field(j, "target");
    return inst;
}

json to_json(const std::vector<SubsetSumInstance>& family) {
    json j;
    j["kind"] = "subset-sum-family";
    json arr = json::array();
    for (const auto& inst : family) {
        json e;
        e["items"] = nat_array(inst.items);
        e["target"] = to_decimal(inst.target);
        arr.push_back(std::move(e));
    }
    j["instances"] = std::move(arr);
    return j;
}

std::vector<SubsetSumInstance> subset_sum_family_from_json(const json& j) {
    expect_kind(j, "subset-sum-family");
    std::vector<SubsetSumInstance> family;
    for (const auto& e : j.at("instances")) {
        SubsetSumInstance inst;
        inst.items = nat_array_from(e.at("items"), "items");
        inst.target = nat_field(e, "target");
        family.push_back(std::move(inst));
    }
    return family;
}

json to_json(const PartitionInstance& inst) {
    json j;
    j["kind"] = "partition";
    j["items"] = nat_array(inst.items);
    j["target"] = to_decimal(inst.target);
    return j;
}

PartitionInstance partition_from_json(const json& j) {
    expect_kind(j, "partition");
    return PartitionInstance::checked(nat_array_from(j.at("items"), "items"),
                                      nat_field(j, "target"));
}

json to_json(const PartitionFamily& family) {
    json j;
    j["kind"] = "partition-family";
    json arr = json::array();
    for (const auto& inst : family.instances) {
        json e;
        e["items"] = nat_array(inst.items);
        e["target"] = to_decimal(inst.target);
        arr.push_back(std::move(e));
    }
    j["instances"] = std::move(arr);
    return j;
}

PartitionFamily partition_family_from_json(const json& j) {
    expect_kind(j, "partition-family");
    std::vector<PartitionInstance> instances;
    for (const auto& e : j.at("instances"))
        instances.push_back(PartitionInstance::checked(nat_array_from(e.at("items"), "items"),
                                                       nat_field(e, "target")));
    return PartitionFamily::make(std::move(instances));
}

json to_json(const SchedulingDecision& dec) {
    json j;
    j["kind"] = "scheduling";
    j["problem"] = problem_tag(dec.problem);
    json jobs = json::array();
    for (const Job& job : dec.jobs) {
        json e;
        e["p"] = to_decimal(job.p);
        if (job.d)
            e["d"] = to_decimal(*job.d);
        if (job.r)
            e["r"] = to_decimal(*job.r);
        if (job.w)
            e["w"] = to_decimal(*job.w);
        if (job.class_index)
            e["class"] = *job.class_index;
        jobs.push_back(std::move(e));
    }
    j["jobs"] = std::move(jobs);
    j["threshold"] = to_decimal(dec.threshold);
    if (dec.rejection_budget)
        j["rejection_budget"] = to_decimal(*dec.rejection_budget);
    return j;
}

SchedulingDecision scheduling_from_json(const json& j) {
    expect_kind(j, "scheduling");
    SchedulingDecision dec;
    auto prob = problem_from_tag(j.at("problem").get<std::string>());
    if (!prob)
        throw Error("unknown problem tag \"" + j.at("problem").get<std::string>() + "\"");
    dec.problem = *prob;
    for (const auto& e : j.at("jobs")) {
        Job job;
        job.p = nat_field(e, "p");
        if (e.contains("d"))
            job.d = nat_field(e, "d");
        if (e.contains("r"))
            job.r = nat_field(e, "r");
        if (e.contains("w"))
            job.w = nat_field(e, "w");
        if (e.contains("class"))
            job.class_index = e["class"].get<std::size_t>();
        dec.jobs.push_back(std::move(job));
    }
    dec.threshold = nat_field(j, "threshold");
    if (j.contains("rejection_budget"))
        dec.rejection_budget = nat_field(j, "rejection_budget");
    return dec;
}

json provenance_to_json(const MergedInstance& merged) {
    json j;
    j["kind"] = "or-merge-provenance";
    json layout;
    layout["encoding_width"] = merged.layout.encoding_width;
    layout["overflow_width"] = merged.layout.overflow_width;
    layout["counting_width"] = merged.layout.counting_width;
    layout["verification_width"] = merged.layout.verification_width;
    j["layout"] = std::move(layout);
    j["n_prime"] = merged.n_prime;
    j["common_target"] = to_decimal(merged.common_target);
    j["original_targets"] = nat_array(merged.original_targets);
    j["kept"] = merged.kept;
    json avg;
    avg["m"] = merged.avg_set.m;
    avg["eps"] = std::to_string(merged.avg_set.eps.num) + "/" +
                 std::to_string(merged.avg_set.eps.den);
    avg["elements"] = nat_array(merged.avg_set.elements);
    j["avg_set"] = std::move(avg);
    json items = json::array();
    for (const ItemProvenance& p : merged.provenance) {
        json e;
        e["instance"] = p.instance;
        if (p.position)
            e["position"] = *p.position;
        items.push_back(std::move(e));
    }
    j["items"] = std::move(items);
    return j;
}

MergedInstance merged_from_json(const json& instance, const json& provenance) {
    expect_kind(provenance, "or-merge-provenance");
    MergedInstance m;
    m.instance = subset_sum_from_json(instance);
    const json& layout = provenance.at("layout");
    m.layout.encoding_width = layout.at("encoding_width").get<unsigned>();
    m.layout.overflow_width = layout.at("overflow_width").get<unsigned>();
    m.layout.counting_width = layout.at("counting_width").get<unsigned>();
    m.layout.verification_width = layout.at("verification_width").get<unsigned>();
    m.n_prime = provenance.at("n_prime").get<std::size_t>();
    m.common_target = nat_field(provenance, "common_target");
    m.original_targets = nat_array_from(provenance.at("original_targets"), "original_targets");
    m.kept = provenance.at("kept").get<std::vector<std::vector<std::size_t>>>();
    const json& avg = provenance.at("avg_set");
    m.avg_set.m = avg.at("m").get<unsigned>();
    m.avg_set.eps = parse_rational(avg.at("eps").get<std::string>());
    m.avg_set.elements = nat_array_from(avg.at("elements"), "avg_set.elements");
    for (const auto& e : provenance.at("items")) {
        ItemProvenance p;
        p.instance = e.at("instance").get<std::size_t>();
        if (e.contains("position"))
            p.position = e["position"].get<std::size_t>();
        m.provenance.push_back(p);
    }
    if (m.provenance.size() != m.instance.items.size())
        throw Error("provenance does not match the merged instance");
    return m;
}

json report_to_json(const RoundTripReport& report) {
    json j;
    j["kind"] = "roundtrip-report";
    j["reduction"] = report.reduction;
    j["trials"] = report.trials;
    j["agreements"] = report.agreements;
    if (report.counterexample_trial) {
        json ce;
        ce["trial"] = *report.counterexample_trial;
        ce["family"] = report.counterexample;
        j["counterexample"] = std::move(ce);
    } else {
        j["counterexample"] = nullptr;
    }
    // Kept under one key so determinism checks can strip it.
    j["timing"] = {{"wall_ms", report.wall_ms}};
    return j;
}

std::string dump(const json& j) {
    return j.dump(2) + "\n";
}

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(std::string("malformed JSON: ") + e.what());
    }
}

json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

void write_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write " + path);
    out << dump(j);
}

}  // namespace redlab::io
