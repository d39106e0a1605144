#include "redlab/instances.hpp"

namespace redlab {

Nat SubsetSumInstance::item_sum() const {
    Nat s = 0;
    for (const Nat& x : items)
        s += x;
    return s;
}

SubsetSumInstance SubsetSumInstance::filtered() const {
    SubsetSumInstance out;
    out.target = target;
    out.items.reserve(items.size());
    for (const Nat& x : items)
        if (x <= target)
            out.items.push_back(x);
    return out;
}

PartitionInstance PartitionInstance::from_items(std::vector<Nat> items) {
    Nat sum = 0;
    for (const Nat& x : items)
        sum += x;
    if (test_bit(sum, 0))
        throw InvalidFamily("partition items sum to an odd number: " + sum.str());
    PartitionInstance p;
    p.items = std::move(items);
    p.target = sum >> 1;
    return p;
}

PartitionInstance PartitionInstance::checked(std::vector<Nat> items, Nat target) {
    Nat sum = 0;
    for (const Nat& x : items)
        sum += x;
    if (target * 2 != sum)
        throw InvalidFamily("partition target " + target.str() + " is not half of the item sum " +
                            sum.str());
    PartitionInstance p;
    p.items = std::move(items);
    p.target = std::move(target);
    return p;
}

SubsetSumInstance PartitionInstance::as_subset_sum() const {
    return SubsetSumInstance{items, target};
}

}  // namespace redlab
