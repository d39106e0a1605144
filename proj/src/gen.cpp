#include "redlab/gen.hpp"

#include <algorithm>

#include "redlab/rng.hpp"
#include "redlab/solvers.hpp"

namespace redlab {

namespace {

// Instances small enough to re-check against the oracle at generation time.
constexpr std::size_t kRecheckLimit = 20;

std::uint64_t checked_bound(const GenSpec& spec) {
    if (spec.count == 0)
        throw BadSpec("family must have at least one instance");
    if (spec.max_items == 0)
        throw BadSpec("instances need at least one item slot");
    if (spec.max_items > 40)
        throw BadSpec("generator supports at most 40 items per instance");
    auto bound = to_u64(spec.value_bound);
    if (!bound || *bound == 0)
        throw BadSpec("value bound must be in [1, 2^64)");
    return *bound;
}

std::vector<Nat> draw_values(SplitMix64& rng, std::size_t count, std::uint64_t lo,
                             std::uint64_t hi) {
    std::vector<Nat> values;
    values.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        values.push_back(Nat(rng.range(lo, hi)));
    return values;
}

void recheck_planted(const std::vector<SubsetSumInstance>& family, Planted planted) {
    bool any_no = false;
    for (const auto& inst : family) {
        if (inst.items.size() > kRecheckLimit)
            return;  // construction is the guarantee at this size
        bool yes = brute_subset_sum_serial(inst).yes;
        if (planted == Planted::Yes && !yes)
            throw Error("internal: planted-yes family contains a no-instance");
        any_no |= !yes;
    }
    if (planted == Planted::No && !any_no)
        throw Error("internal: planted-no family contains no no-instance");
}

SubsetSumInstance gen_subset_sum(SplitMix64& rng, const GenSpec& spec, std::uint64_t bound) {
    const std::size_t size = static_cast<std::size_t>(rng.range(1, spec.max_items));
    SubsetSumInstance inst;

    switch (spec.planted) {
        case Planted::Yes: {
            inst.items = draw_values(rng, size, 1, bound);
            const std::uint64_t mask = rng.range(1, (std::uint64_t(1) << size) - 1);
            Nat target = 0;
            for (std::size_t i = 0; i < size; ++i)
                if ((mask >> i) & 1)
                    target += inst.items[i];
            inst.target = std::move(target);
            break;
        }
        case Planted::No: {
            inst.items = draw_values(rng, size, 1, bound);
            Nat sum = inst.item_sum();
            bool found = false;
            if (size <= kRecheckLimit) {
                for (int attempt = 0; attempt < 64 && !found; ++attempt) {
                    Nat t = Nat(rng.range(1, to_u64(sum).value_or(1)));
                    inst.target = t;
                    if (!brute_subset_sum_serial(inst).yes)
                        found = true;
                }
            }
            if (!found)
                inst.target = sum + 1;  // above the total sum: never reachable
            break;
        }
        case Planted::Random: {
            // Zeros are first-class items; let them appear here.
            inst.target = Nat(rng.range(1, bound));
            inst.items.reserve(size);
            for (std::size_t i = 0; i < size; ++i)
                inst.items.push_back(Nat(rng.below(bound + 1)));
            // Keep at least one item usable so the instance stays inside the
            // normalization domain (an all-filtered instance has no
            // normalized form).
            bool usable = false;
            for (const Nat& x : inst.items)
                usable = usable || x <= inst.target;
            if (!usable)
                inst.items.back() = Nat(rng.below(to_u64(inst.target).value() + 1));
            break;
        }
    }
    return inst;
}

// sum split into `parts` values, each in [1, bound].
std::vector<Nat> random_composition(SplitMix64& rng, std::uint64_t sum, std::size_t parts,
                                    std::uint64_t bound) {
    std::vector<Nat> out;
    out.reserve(parts);
    std::uint64_t rem = sum;
    for (std::size_t i = 0; i < parts; ++i) {
        const std::uint64_t left = parts - i - 1;
        const std::uint64_t lo = rem > left * bound ? rem - left * bound : 1;
        const std::uint64_t hi = std::min(bound, rem - left);
        const std::uint64_t v = rng.range(lo, hi);
        out.push_back(Nat(v));
        rem -= v;
    }
    return out;
}

PartitionInstance gen_partition_yes(SplitMix64& rng, const GenSpec& spec, std::uint64_t bound) {
    if (spec.max_items < 2)
        throw BadSpec("a planted-yes partition instance needs at least two item slots");
    const std::size_t a = static_cast<std::size_t>(rng.range(1, spec.max_items / 2));
    std::vector<Nat> side = draw_values(rng, a, 1, bound);
    std::uint64_t sum = 0;
    for (const Nat& x : side)
        sum += to_u64(x).value();

    // Mirror the drawn side's sum on the complement side.
    const std::uint64_t lo = (sum + bound - 1) / bound;
    const std::uint64_t hi = std::min<std::uint64_t>(spec.max_items - a, sum);
    const std::size_t b = static_cast<std::size_t>(rng.range(lo, hi));
    std::vector<Nat> mirror = random_composition(rng, sum, b, bound);

    std::vector<Nat> items = std::move(side);
    items.insert(items.end(), mirror.begin(), mirror.end());
    for (std::size_t i = items.size(); i-- > 1;)
        std::swap(items[i], items[rng.below(i + 1)]);
    return PartitionInstance::checked(std::move(items), Nat(sum));
}

PartitionInstance gen_partition_no(const GenSpec& spec, std::uint64_t bound) {
    // Construction-guaranteed no-instances: {1,3} (nothing sums to 2) or the
    // one-item {2} (nothing sums to 1).
    if (spec.max_items >= 2 && bound >= 3)
        return PartitionInstance::checked({Nat(1), Nat(3)}, Nat(2));
    if (bound >= 2)
        return PartitionInstance::checked({Nat(2)}, Nat(1));
    throw BadSpec("cannot plant a no-instance with value bound 1");
}

PartitionInstance gen_partition_random(SplitMix64& rng, const GenSpec& spec,
                                       std::uint64_t bound) {
    std::size_t size = static_cast<std::size_t>(rng.range(1, spec.max_items));
    std::vector<Nat> items = draw_values(rng, size, 1, bound);
    Nat sum = 0;
    for (const Nat& x : items)
        sum += x;
    if (test_bit(sum, 0)) {
        // Fix the parity in place.
        if (bound >= 2) {
            if (items.back() < bound)
                items.back() += 1;
            else
                items.back() -= 1;
        } else if (size >= 2) {
            items.pop_back();
        } else {
            throw BadSpec("cannot form a partition instance with one item of value 1");
        }
    }
    return PartitionInstance::from_items(std::move(items));
}

}  // namespace

std::vector<SubsetSumInstance> gen_subset_sum_family(const GenSpec& spec) {
    const std::uint64_t bound = checked_bound(spec);
    std::vector<SubsetSumInstance> family;
    family.reserve(spec.count);
    for (std::size_t i = 0; i < spec.count; ++i) {
        SplitMix64 rng = child_rng(spec.seed, i);
        family.push_back(gen_subset_sum(rng, spec, bound));
    }
    if (spec.planted == Planted::No) {
        // Make sure at least one member is a no-instance even if every random
        // draw found one by luck elsewhere; member 0's stream already decided
        // its own target, so this is deterministic.
        bool any_no = false;
        for (const auto& inst : family)
            if (inst.items.size() <= kRecheckLimit && !brute_subset_sum_serial(inst).yes)
                any_no = true;
        if (!any_no) {
            family[0].target = family[0].item_sum() + 1;
        }
    }
    if (spec.planted != Planted::Random)
        recheck_planted(family, spec.planted);
    return family;
}

PartitionFamily gen_partition_family(const GenSpec& spec) {
    const std::uint64_t bound = checked_bound(spec);
    std::vector<PartitionInstance> instances;
    instances.reserve(spec.count);
    for (std::size_t i = 0; i < spec.count; ++i) {
        SplitMix64 rng = child_rng(spec.seed, i);
        switch (spec.planted) {
            case Planted::Yes:
                instances.push_back(gen_partition_yes(rng, spec, bound));
                break;
            case Planted::Random:
            case Planted::No:  // the rest of the family stays unconstrained
                instances.push_back(gen_partition_random(rng, spec, bound));
                break;
        }
    }
    if (spec.planted == Planted::No) {
        SplitMix64 rng = child_rng(spec.seed, spec.count);
        instances[rng.below(spec.count)] = gen_partition_no(spec, bound);
    }

    if (spec.planted != Planted::Random) {
        std::vector<SubsetSumInstance> as_subset;
        for (const auto& inst : instances)
            as_subset.push_back(inst.as_subset_sum());
        recheck_planted(as_subset, spec.planted);
    }
    return PartitionFamily::make(std::move(instances));
}

}  // namespace redlab
