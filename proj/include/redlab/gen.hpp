#pragma once

#include <cstdint>

#include "redlab/instances.hpp"
#include "redlab/sched.hpp"

namespace redlab {

enum class Planted { Yes, No, Random };

// Deterministic family generator. `planted` pins the family answer: Yes
// plants a solution in every member, No guarantees at least one member
// without one, Random draws targets blindly. value_bound caps drawn item
// values and random-mode targets.
struct GenSpec {
    std::uint64_t seed = 0;
    std::size_t count = 1;      // N
    std::size_t max_items = 4;  // s
    Nat value_bound = 10;
    Planted planted = Planted::Random;
};

std::vector<SubsetSumInstance> gen_subset_sum_family(const GenSpec& spec);
PartitionFamily gen_partition_family(const GenSpec& spec);

}  // namespace redlab
