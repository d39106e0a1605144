#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "redlab/avgfree.hpp"
#include "redlab/blocks.hpp"
#include "redlab/instances.hpp"

namespace redlab {

// A family of Subset Sum instances brought to a common shape: shared target
// t* = (n+1)*t, one closing item t* - t_i appended per instance, zero padding
// to the common length 2*n', and the guarantee that a yes-instance always
// has a solution of exactly n' items.
struct NormalizedFamily {
    std::vector<std::vector<Nat>> instances;  // each of length 2*n_prime
    Nat common_target;                        // t*
    std::size_t n_prime = 0;
    std::vector<std::size_t> original_sizes;
    std::vector<Nat> original_targets;
    // Per instance: normalized position j < kept[i].size() came from original
    // item kept[i][j]; the closing item and zero padding follow.
    std::vector<std::vector<std::size_t>> kept;
};

// Origin of one merged item: an encoded item (instance, position within the
// normalized list) or the per-instance selector.
struct ItemProvenance {
    std::size_t instance = 0;  // 1-based, as in the family order
    std::optional<std::size_t> position;

    bool is_selector() const { return !position.has_value(); }
};

struct MergedInstance {
    SubsetSumInstance instance;  // (X0, t0)
    BlockLayout layout;
    AvgFreeSet avg_set;
    std::size_t n_prime = 0;
    std::vector<ItemProvenance> provenance;  // parallel to instance.items

    // Witness-mapping data carried over from the normalized family.
    Nat common_target;
    std::vector<Nat> original_targets;
    std::vector<std::vector<std::size_t>> kept;
};

struct ExtractedWitness {
    std::size_t instance_index = 0;        // 1-based
    std::vector<std::size_t> item_indices; // indices into the original instance
    std::vector<Nat> items;
};

// Throws DegenerateTarget if some target is zero (trivially yes; resolved by
// the caller), InvalidFamily if the family is empty or an instance has no
// item <= its target.
NormalizedFamily normalize_family(const std::vector<SubsetSumInstance>& instances);

// Builds the single instance that is yes iff at least one family member is.
MergedInstance merge(const NormalizedFamily& family, Rational eps = Rational{1, 2});

// Maps a solution of the merged instance (item indices summing to t0) back
// to the unique source instance and a subset of its original items summing
// to the original target.
ExtractedWitness extract_witness(const MergedInstance& merged,
                                 const std::vector<std::size_t>& solution);

}  // namespace redlab
