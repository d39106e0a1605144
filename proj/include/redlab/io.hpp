#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "redlab/instances.hpp"
#include "redlab/or_merge.hpp"
#include "redlab/roundtrip.hpp"
#include "redlab/sched.hpp"

namespace redlab::io {

using nlohmann::json;

// All integers cross the file boundary as decimal strings; nothing big ever
// touches a native number field.

json to_json(const SubsetSumInstance& inst);                     // kind: subset-sum
json to_json(const std::vector<SubsetSumInstance>& family);      // kind: subset-sum-family
json to_json(const PartitionInstance& inst);                     // kind: partition
json to_json(const PartitionFamily& family);                     // kind: partition-family
json to_json(const SchedulingDecision& dec);                     // kind: scheduling
json provenance_to_json(const MergedInstance& merged);           // kind: or-merge-provenance
json report_to_json(const RoundTripReport& report);              // kind: roundtrip-report

SubsetSumInstance subset_sum_from_json(const json& j);
std::vector<SubsetSumInstance> subset_sum_family_from_json(const json& j);
PartitionInstance partition_from_json(const json& j);
PartitionFamily partition_family_from_json(const json& j);
SchedulingDecision scheduling_from_json(const json& j);
MergedInstance merged_from_json(const json& instance, const json& provenance);

// Canonical text form: keys sorted (json's object is ordered by key),
// two-space indent, trailing newline. Identical values dump to identical
// bytes.
std::string dump(const json& j);

json parse(const std::string& text);
json read_file(const std::string& path);
void write_file(const std::string& path, const json& j);

}  // namespace redlab::io
