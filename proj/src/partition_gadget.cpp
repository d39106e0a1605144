#include "redlab/partition_gadget.hpp"

#include <algorithm>

namespace redlab {

PartitionInstance to_partition(const SubsetSumInstance& inst) {
    if (inst.items.empty())
        throw Error("cannot build a partition gadget from an empty instance");
    if (inst.target.is_zero())
        throw TrivialInstance(true);  // the empty subset works
    const Nat sum = inst.item_sum();
    if (inst.target > sum)
        throw TrivialInstance(false);

    std::vector<Nat> items = inst.items;
    items.push_back(sum + inst.target);
    items.push_back(sum * 2 - inst.target);
    // Total is 4*sum, so the half-sum target 2*sum is always integral.
    return PartitionInstance::checked(std::move(items), sum * 2);
}

std::vector<std::size_t> partition_witness_to_subset(const SubsetSumInstance& inst,
                                                     const std::vector<std::size_t>& side) {
    const PartitionInstance gadget = to_partition(inst);
    const std::size_t n = inst.items.size();
    const std::size_t marker = n + 1;  // index of the 2*sum - t item

    std::vector<bool> in_side(gadget.items.size(), false);
    Nat side_sum = 0;
    for (std::size_t idx : side) {
        if (idx >= gadget.items.size() || in_side[idx])
            throw NotAWitness("side is not a subset of the gadget's item indices");
        in_side[idx] = true;
        side_sum += gadget.items[idx];
    }
    if (side_sum != gadget.target)
        throw NotAWitness("side sums to " + side_sum.str() + ", not the partition target " +
                          gadget.target.str());

    // Work with whichever side holds the marker item; the complement of a
    // balanced side is balanced too.
    if (!in_side[marker]) {
        in_side.flip();
        if (!in_side[marker])
            throw NotAWitness("neither side contains the marker item");
    }
    // A balanced marker side can never also hold sum+t (they alone exceed
    // the target), so everything else on it is an original item.
    if (in_side[n])
        throw NotAWitness("side contains both added items yet sums to the target");

    std::vector<std::size_t> subset;
    Nat check = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (in_side[i]) {
            subset.push_back(i);
            check += inst.items[i];
        }
    }
    if (check != inst.target)
        throw NotAWitness("mapped subset does not sum to the original target");
    return subset;
}

}  // namespace redlab
