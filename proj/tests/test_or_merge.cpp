#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include "redlab/gen.hpp"
#include "redlab/or_merge.hpp"
#include "redlab/rng.hpp"
#include "redlab/solvers.hpp"

using namespace redlab;

namespace {

SubsetSumInstance make(std::vector<std::uint64_t> items, std::uint64_t target) {
    SubsetSumInstance inst;
    for (auto v : items)
        inst.items.push_back(Nat(v));
    inst.target = Nat(target);
    return inst;
}

}  // namespace

TEST_CASE("normalization of a one-instance family") {
    NormalizedFamily f = normalize_family({make({1}, 1)});
    CHECK(f.n_prime == 2);
    CHECK(f.common_target == Nat(2));
    REQUIRE(f.instances.size() == 1);
    CHECK(f.instances[0] == std::vector<Nat>{Nat(1), Nat(1), Nat(0), Nat(0)});
}

TEST_CASE("normalization aligns lengths and closing items") {
    NormalizedFamily f = normalize_family({make({2, 4}, 6), make({3}, 3)});
    CHECK(f.n_prime == 3);
    CHECK(f.common_target == Nat(18));
    CHECK(f.instances[0] == std::vector<Nat>{Nat(2), Nat(4), Nat(12), Nat(0), Nat(0), Nat(0)});
    CHECK(f.instances[1] == std::vector<Nat>{Nat(3), Nat(15), Nat(0), Nat(0), Nat(0), Nat(0)});
}

TEST_CASE("items above the target are dropped before normalizing") {
    NormalizedFamily f = normalize_family({make({5, 1}, 1)});
    CHECK(f.n_prime == 2);
    CHECK(f.instances[0] == std::vector<Nat>{Nat(1), Nat(1), Nat(0), Nat(0)});
    CHECK(f.kept[0] == std::vector<std::size_t>{1});
}

TEST_CASE("zero targets are reported, not normalized") {
    try {
        normalize_family({make({1}, 1), make({5}, 0)});
        FAIL("expected DegenerateTarget");
    } catch (const DegenerateTarget& e) {
        CHECK(e.instance_index == 1);
    }
}

TEST_CASE("instances with no usable item are rejected") {
    CHECK_THROWS_AS(normalize_family({make({7, 9}, 2)}), InvalidFamily);
    CHECK_THROWS_AS(normalize_family({}), InvalidFamily);
}

TEST_CASE("normalization preserves each instance's answer") {
    SplitMix64 rng(11);
    for (int iter = 0; iter < 200; ++iter) {
        GenSpec spec;
        spec.seed = rng.next();
        spec.count = 1 + rng.below(3);
        spec.max_items = 1 + rng.below(4);
        spec.value_bound = Nat(1 + rng.below(20));
        auto family = gen_subset_sum_family(spec);
        NormalizedFamily norm = normalize_family(family);
        for (std::size_t i = 0; i < family.size(); ++i) {
            SubsetSumInstance normalized{norm.instances[i], norm.common_target};
            CHECK(brute_subset_sum_serial(family[i]).yes ==
                  brute_subset_sum_serial(normalized).yes);
        }
    }
}

TEST_CASE("every normalized yes-instance has a solution of exactly n' items") {
    SplitMix64 rng(4242);
    for (int iter = 0; iter < 100; ++iter) {
        GenSpec spec;
        spec.seed = rng.next();
        spec.count = 1 + rng.below(2);
        spec.max_items = 1 + rng.below(3);  // lists stay short enough to enumerate
        spec.value_bound = Nat(1 + rng.below(15));
        spec.planted = Planted::Yes;
        auto family = gen_subset_sum_family(spec);
        NormalizedFamily norm = normalize_family(family);
        for (const auto& list : norm.instances) {
            REQUIRE(list.size() == 2 * norm.n_prime);
            bool found = false;
            for (std::size_t mask = 0; mask < (std::size_t(1) << list.size()) && !found;
                 ++mask) {
                if (static_cast<std::size_t>(std::popcount(mask)) != norm.n_prime)
                    continue;
                Nat sum = 0;
                for (std::size_t i = 0; i < list.size(); ++i)
                    if ((mask >> i) & 1)
                        sum += list[i];
                found = sum == norm.common_target;
            }
            CHECK(found);
        }
    }
}

TEST_CASE("merged one-instance family") {
    MergedInstance merged = merge(normalize_family({make({1}, 1)}));
    CHECK(merged.instance.items.size() == 5);  // 1 * (2*2 + 1)
    CHECK(bit_length(merged.instance.target) <= merged.layout.total_bits());
    SubsetDecision d = solve_subset_sum_exact(merged.instance);
    CHECK(d.yes);

    ExtractedWitness w = extract_witness(merged, d.witness);
    CHECK(w.instance_index == 1);
    CHECK(w.items == std::vector<Nat>{Nat(1)});
    CHECK(w.item_indices == std::vector<std::size_t>{0});
}

TEST_CASE("merge of two no-instances is a no-instance") {
    MergedInstance merged = merge(normalize_family({make({2, 4}, 3), make({2, 4}, 5)}));
    CHECK_FALSE(solve_subset_sum_exact(merged.instance).yes);
}

TEST_CASE("merge of a mixed family is a yes-instance with a mapped witness") {
    auto original = std::vector<SubsetSumInstance>{make({2, 4}, 6), make({2, 4}, 5)};
    MergedInstance merged = merge(normalize_family(original));
    SubsetDecision d = solve_subset_sum_exact(merged.instance);
    REQUIRE(d.yes);
    ExtractedWitness w = extract_witness(merged, d.witness);
    CHECK(w.instance_index == 1);
    CHECK(w.items == std::vector<Nat>{Nat(2), Nat(4)});
}

TEST_CASE("solutions with the wrong sum are rejected") {
    MergedInstance merged = merge(normalize_family({make({1}, 1)}));
    CHECK_THROWS_AS(extract_witness(merged, {0}), NotASolution);
}

TEST_CASE("every merged item decomposes to its provenance") {
    auto family = std::vector<SubsetSumInstance>{make({2, 4}, 6), make({3}, 3)};
    NormalizedFamily norm = normalize_family(family);
    MergedInstance merged = merge(norm);
    const Nat s_max = merged.avg_set.max_element();
    REQUIRE(merged.instance.items.size() == merged.provenance.size());
    for (std::size_t i = 0; i < merged.instance.items.size(); ++i) {
        BlockFields f = block_decompose(merged.layout, merged.instance.items[i]);
        const ItemProvenance& p = merged.provenance[i];
        CHECK(f.overflow1 == Nat(0));
        CHECK(f.overflow2 == Nat(0));
        CHECK(f.overflow3 == Nat(0));
        const Nat s_i = merged.avg_set.elements[p.instance - 1];
        if (p.is_selector()) {
            CHECK(f.flag == Nat(1));
            CHECK(f.counting == Nat(0));
            CHECK(f.encoding == Nat(0));
            CHECK(f.verification == Nat(merged.n_prime) * (s_max - s_i));
        } else {
            CHECK(f.flag == Nat(0));
            CHECK(f.counting == Nat(1));
            CHECK(f.verification == s_i);
            CHECK(f.encoding == norm.instances[p.instance - 1][*p.position]);
        }
    }
}

TEST_CASE("size law and random-subset carry freedom") {
    SplitMix64 rng(2024);
    for (int iter = 0; iter < 30; ++iter) {
        GenSpec spec;
        spec.seed = rng.next();
        spec.count = 1 + rng.below(4);
        spec.max_items = 1 + rng.below(5);
        spec.value_bound = Nat(1 + rng.below(25));
        auto family = gen_subset_sum_family(spec);
        NormalizedFamily norm = normalize_family(family);
        MergedInstance merged = merge(norm);

        CHECK(merged.instance.items.size() == family.size() * (2 * merged.n_prime + 1));
        CHECK(bit_length(merged.instance.target) <= merged.layout.total_bits());

        const auto& items = merged.instance.items;
        for (int sample = 0; sample < 50; ++sample) {
            Nat total = 0, enc = 0, cnt = 0, ver = 0, flag = 0;
            for (std::size_t i = 0; i < items.size(); ++i) {
                if (!rng.coin())
                    continue;
                total += items[i];
                BlockFields f = block_decompose(merged.layout, items[i]);
                enc += f.encoding;
                cnt += f.counting;
                ver += f.verification;
                flag += f.flag;
            }
            ExtendedSlices s = extended_slices(merged.layout, total);
            CHECK(s.encoding == enc);
            CHECK(s.counting == cnt);
            CHECK(s.verification == ver);
            CHECK(s.flag == flag);
        }
    }
}

TEST_CASE("merged decision equals the OR of member answers") {
    SplitMix64 rng(515);
    for (int iter = 0; iter < 60; ++iter) {
        GenSpec spec;
        spec.seed = rng.next();
        spec.count = 1 + rng.below(4);
        spec.max_items = 1 + rng.below(5);
        spec.value_bound = Nat(1 + rng.below(25));
        auto family = gen_subset_sum_family(spec);

        bool expected = false;
        for (const auto& inst : family)
            expected = expected || brute_subset_sum_serial(inst).yes;

        MergedInstance merged = merge(normalize_family(family));
        SubsetDecision d = solve_subset_sum_exact(merged.instance);
        CHECK(d.yes == expected);
        if (d.yes) {
            ExtractedWitness w = extract_witness(merged, d.witness);
            Nat sum = 0;
            for (std::size_t idx : w.item_indices)
                sum += family[w.instance_index - 1].items[idx];
            CHECK(sum == family[w.instance_index - 1].target);
        }
    }
}

TEST_CASE("identical instances merge without provenance confusion") {
    // Both members encode to the same item values; provenance, not value,
    // decides the witness mapping.
    auto family = std::vector<SubsetSumInstance>{make({2}, 2), make({2}, 2)};
    MergedInstance merged = merge(normalize_family(family));
    SubsetDecision d = solve_subset_sum_exact(merged.instance);
    REQUIRE(d.yes);
    ExtractedWitness w = extract_witness(merged, d.witness);
    CHECK((w.instance_index == 1 || w.instance_index == 2));
    CHECK(w.items == std::vector<Nat>{Nat(2)});
}

TEST_CASE("original zero items survive the witness mapping") {
    // The instance's own zero is distinct from the padding zeros; a witness
    // may include it and must map back to a real index.
    auto family = std::vector<SubsetSumInstance>{make({0, 3}, 3)};
    MergedInstance merged = merge(normalize_family(family));
    SubsetDecision d = solve_subset_sum_exact(merged.instance);
    REQUIRE(d.yes);
    ExtractedWitness w = extract_witness(merged, d.witness);
    CHECK(w.instance_index == 1);
    Nat sum = 0;
    for (const Nat& v : w.items)
        sum += v;
    CHECK(sum == Nat(3));
    for (std::size_t idx : w.item_indices)
        CHECK(idx < family[0].items.size());
}

TEST_CASE("exact search agrees with plain enumeration on merged instances") {
    // The exact solver is the only scalable decider for merged instances, so
    // pin it against the 2^n oracle on families small enough to enumerate.
    SplitMix64 rng(8086);
    for (int iter = 0; iter < 40; ++iter) {
        GenSpec spec;
        spec.seed = rng.next();
        spec.count = 1 + rng.below(2);              // N <= 2
        spec.max_items = 1 + rng.below(3);          // sizes <= 3, so |X0| <= 18
        spec.value_bound = Nat(1 + rng.below(12));
        auto family = gen_subset_sum_family(spec);
        MergedInstance merged = merge(normalize_family(family));
        REQUIRE(merged.instance.items.size() <= 18);
        SubsetDecision exact = solve_subset_sum_exact(merged.instance);
        SubsetDecision brute = brute_subset_sum_serial(merged.instance);
        CHECK(exact.yes == brute.yes);
    }
}

TEST_CASE("merging survives targets far beyond 64 bits") {
    // Forces the pure-bignum path end to end: wide encoding blocks, items
    // beyond any machine word, and the exact search's Nat branch.
    SubsetSumInstance wide;
    wide.items = {pow2(80), Nat(3), Nat(5)};
    wide.target = pow2(80) + 8;
    SubsetSumInstance narrow = SubsetSumInstance{{Nat(2), Nat(4)}, Nat(5)};

    MergedInstance merged = merge(normalize_family({wide, narrow}));
    CHECK(merged.layout.encoding_width >= 80);
    SubsetDecision d = solve_subset_sum_exact(merged.instance);
    REQUIRE(d.yes);
    ExtractedWitness w = extract_witness(merged, d.witness);
    CHECK(w.instance_index == 1);
    Nat sum = 0;
    for (const Nat& v : w.items)
        sum += v;
    CHECK(sum == wide.target);

    wide.target = pow2(80) + 7;  // 2^80 + 3 + 5 - 1: unreachable
    MergedInstance no = merge(normalize_family({wide}));
    CHECK_FALSE(solve_subset_sum_exact(no.instance).yes);
}

TEST_CASE("the eps knob changes the average-free set, not the answer") {
    auto family = std::vector<SubsetSumInstance>{make({2, 4}, 6), make({1, 2, 3}, 4)};
    for (Rational eps : {Rational{3, 10}, Rational{1, 2}, Rational{9, 10}}) {
        MergedInstance merged = merge(normalize_family(family), eps);
        CHECK(solve_subset_sum_exact(merged.instance).yes);
    }
}
