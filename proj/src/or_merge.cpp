#include "redlab/or_merge.hpp"

#include <algorithm>

namespace redlab {

NormalizedFamily normalize_family(const std::vector<SubsetSumInstance>& instances) {
    if (instances.empty())
        throw InvalidFamily("cannot normalize an empty family");

    for (std::size_t i = 0; i < instances.size(); ++i)
        if (instances[i].target.is_zero())
            throw DegenerateTarget(i);

    // Items above their target can never be used; drop them first.
    std::vector<std::vector<std::size_t>> kept(instances.size());
    std::size_t n = 0;  // max instance size after the filter
    Nat t = 0;          // max target
    for (std::size_t i = 0; i < instances.size(); ++i) {
        for (std::size_t j = 0; j < instances[i].items.size(); ++j)
            if (instances[i].items[j] <= instances[i].target)
                kept[i].push_back(j);
        if (kept[i].empty())
            throw InvalidFamily("instance " + std::to_string(i) +
                                " has no item <= its target (trivially no)");
        n = std::max(n, kept[i].size());
        t = std::max(t, instances[i].target);
    }

    NormalizedFamily family;
    family.n_prime = n + 1;
    family.common_target = t * (n + 1);  // t*
    family.kept = std::move(kept);

    const std::size_t len = 2 * family.n_prime;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        std::vector<Nat> list;
        list.reserve(len);
        for (std::size_t j : family.kept[i])
            list.push_back(instances[i].items[j]);
        // Closing item lifts any subset summing to t_i up to t*; zero padding
        // then lets a yes-solution use exactly n' items.
        list.push_back(sub_exact(family.common_target, instances[i].target));
        list.resize(len, Nat(0));
        family.instances.push_back(std::move(list));
        family.original_sizes.push_back(instances[i].items.size());
        family.original_targets.push_back(instances[i].target);
    }
    return family;
}

MergedInstance merge(const NormalizedFamily& family, Rational eps) {
    const std::size_t N = family.instances.size();
    if (N == 0)
        throw InvalidFamily("empty family");
    const std::size_t n_prime = family.n_prime;
    for (const auto& list : family.instances)
        if (list.size() != 2 * n_prime)
            throw InvalidFamily("normalized lists must all have length 2*n'");

    // One distinct average-free element per instance. A selected solution
    // contributes n' verification summands, and the average-free property is
    // exactly what forces them to agree on a single instance.
    AvgFreeSet avg = construct_avg_free(static_cast<unsigned>(n_prime), N, eps);
    const Nat s_max = avg.max_element();

    const std::size_t item_count = N * (2 * n_prime + 1);
    BlockLayout layout;
    layout.encoding_width =
        static_cast<unsigned>(std::max<std::size_t>(1, bit_length(family.common_target)));
    layout.counting_width = static_cast<unsigned>(std::max<std::size_t>(1, bit_length(Nat(n_prime))));
    layout.verification_width =
        static_cast<unsigned>(std::max<std::size_t>(1, bit_length(Nat(n_prime) * s_max)));
    // Any subset sums at most item_count copies of a field, and
    // item_count <= 2^(overflow_width - 1), so carries never reach the top
    // bit of an overflow block.
    layout.overflow_width = static_cast<unsigned>(bit_length(Nat(item_count)) + 1);

    MergedInstance merged;
    merged.layout = layout;
    merged.n_prime = n_prime;
    merged.common_target = family.common_target;
    merged.original_targets = family.original_targets;
    merged.kept = family.kept;

    merged.instance.items.reserve(item_count);
    merged.provenance.reserve(item_count);
    for (std::size_t i = 0; i < N; ++i) {
        const Nat& s_i = avg.elements[i];
        for (std::size_t j = 0; j < family.instances[i].size(); ++j) {
            BlockValues v;
            v.encoding = family.instances[i][j];
            v.counting = 1;
            v.verification = s_i;
            v.flag = 0;
            merged.instance.items.push_back(block_compose(layout, v));
            merged.provenance.push_back(ItemProvenance{i + 1, j});
        }
        BlockValues sel;
        sel.encoding = 0;
        sel.counting = 0;
        sel.verification = Nat(n_prime) * sub_exact(s_max, s_i);
        sel.flag = 1;
        merged.instance.items.push_back(block_compose(layout, sel));
        merged.provenance.push_back(ItemProvenance{i + 1, std::nullopt});
    }

    BlockValues target;
    target.encoding = family.common_target;
    target.counting = Nat(n_prime);
    target.verification = Nat(n_prime) * s_max;
    target.flag = 1;
    merged.instance.target = block_compose(layout, target);

    merged.avg_set = std::move(avg);
    return merged;
}

ExtractedWitness extract_witness(const MergedInstance& merged,
                                 const std::vector<std::size_t>& solution) {
    const auto& items = merged.instance.items;
    Nat sum = 0;
    for (std::size_t idx : solution) {
        if (idx >= items.size())
            throw NotASolution("solution index out of range");
        sum += items[idx];
    }
    if (sum != merged.instance.target)
        throw NotASolution("solution sums to " + sum.str() + ", not the target " +
                           merged.instance.target.str());

    // Exactly one selector pins the source instance.
    std::optional<std::size_t> selector_instance;
    for (std::size_t idx : solution) {
        const ItemProvenance& p = merged.provenance[idx];
        if (p.is_selector()) {
            if (selector_instance)
                throw MalformedSolution("solution contains two selectors");
            selector_instance = p.instance;
        }
    }
    if (!selector_instance)
        throw MalformedSolution("solution contains no selector");

    ExtractedWitness w;
    w.instance_index = *selector_instance;
    const auto& kept = merged.kept[w.instance_index - 1];
    std::vector<std::pair<std::size_t, Nat>> mapped;
    Nat original_sum = 0;
    for (std::size_t idx : solution) {
        const ItemProvenance& p = merged.provenance[idx];
        if (p.is_selector())
            continue;
        if (p.instance != w.instance_index)
            throw MalformedSolution("solution mixes items of several instances");
        std::size_t pos = *p.position;
        if (pos < kept.size()) {
            // An original item; the closing item and the zero padding behind
            // it do not map back.
            const Nat value = block_decompose(merged.layout, items[idx]).encoding;
            original_sum += value;
            mapped.emplace_back(kept[pos], value);
        }
    }
    if (original_sum != merged.original_targets[w.instance_index - 1])
        throw MalformedSolution("mapped witness does not sum to the original target");
    std::sort(mapped.begin(), mapped.end());
    for (auto& [idx, value] : mapped) {
        w.item_indices.push_back(idx);
        w.items.push_back(std::move(value));
    }
    return w;
}

}  // namespace redlab
