#pragma once

#include <vector>

#include "redlab/nat.hpp"

namespace redlab {

// A multiset of items (duplicates and zeros allowed) and a target. Canonical
// instances keep every item <= target; an item above the target can never be
// used, so filtered() preserves the answer.
struct SubsetSumInstance {
    std::vector<Nat> items;
    Nat target;

    Nat item_sum() const;
    SubsetSumInstance filtered() const;

    bool operator==(const SubsetSumInstance&) const = default;
};

// Subset Sum with the target pinned to half the total item sum.
struct PartitionInstance {
    std::vector<Nat> items;
    Nat target;

    // Target derived from the items; throws InvalidFamily if the sum is odd.
    static PartitionInstance from_items(std::vector<Nat> items);
    // Validates 2*target == sum of items.
    static PartitionInstance checked(std::vector<Nat> items, Nat target);

    SubsetSumInstance as_subset_sum() const;

    bool operator==(const PartitionInstance&) const = default;
};

}  // namespace redlab
