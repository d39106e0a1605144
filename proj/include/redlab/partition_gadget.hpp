#pragma once

#include <cstddef>
#include <vector>

#include "redlab/instances.hpp"

namespace redlab {

// Two-item gadget: append sum+t and 2*sum-t to the items. The two extra
// items cannot share a side of a balanced partition (together they exceed
// the half sum), so a balanced partition exists iff the original instance
// has a subset summing to t.
//
// Throws TrivialInstance(yes) for t = 0 and TrivialInstance(no) for
// t > sum; throws Error on an empty item list.
PartitionInstance to_partition(const SubsetSumInstance& inst);

// Maps one side of a balanced partition of the gadget back to a subset of
// the original items summing to the original target. side holds indices into
// the gadget's items (originals first, then sum+t at |X|, 2*sum-t at |X|+1).
// Throws NotAWitness unless the side sums to the partition target.
std::vector<std::size_t> partition_witness_to_subset(const SubsetSumInstance& inst,
                                                     const std::vector<std::size_t>& side);

}  // namespace redlab
