#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "redlab/blocks.hpp"
#include "redlab/nat.hpp"
#include "redlab/rng.hpp"

using namespace redlab;

TEST_CASE("decimal parsing and printing") {
    CHECK(to_decimal(parse_nat("0")) == "0");
    CHECK(to_decimal(parse_nat("18446744073709551616")) == "18446744073709551616");
    CHECK_THROWS_AS(parse_nat("-3"), Error);
    CHECK_THROWS_AS(parse_nat("12x"), Error);
    CHECK_THROWS_AS(parse_nat(""), Error);
    CHECK_THROWS_AS(parse_nat(" 1"), Error);
}

TEST_CASE("bit helpers") {
    CHECK(bit_length(Nat(0)) == 0);
    CHECK(bit_length(Nat(1)) == 1);
    CHECK(bit_length(Nat(255)) == 8);
    CHECK(bit_length(Nat(256)) == 9);
    CHECK(slice_bits(Nat(0b1101'0110), 2, 4) == Nat(0b0101));
    CHECK(slice_bits(pow2(100) + 7, 100, 4) == Nat(1));
    CHECK(sub_exact(Nat(10), Nat(4)) == Nat(6));
    CHECK_THROWS_AS(sub_exact(Nat(4), Nat(10)), Error);
    CHECK(to_u64(pow2(64)) == std::nullopt);
    CHECK(to_u64(pow2(64) - 1).value() == UINT64_MAX);
    CHECK(nat_pow(Nat(3), 5) == Nat(243));
    CHECK(nat_pow(Nat(7), 0) == Nat(1));
}

namespace {

const BlockLayout kExample{4, 3, 2, 2};  // encoding, overflow, counting, verification

}

TEST_CASE("compose matches positional arithmetic") {
    BlockValues v;
    v.encoding = 3;
    v.counting = 1;
    v.verification = 1;
    v.flag = 0;
    CHECK(block_compose(kExample, v) == Nat(4227));  // 3 + 2^7 + 2^12

    BlockValues zero;
    CHECK(block_compose(kExample, zero) == Nat(0));

    BlockValues wide;
    wide.encoding = 16;  // needs 5 bits
    CHECK_THROWS_AS(block_compose(kExample, wide), FieldOverflow);
}

TEST_CASE("decompose slices exactly") {
    CHECK(kExample.total_bits() == 18);
    BlockFields f = block_decompose(kExample, Nat(4227));
    CHECK(f.encoding == Nat(3));
    CHECK(f.overflow1 == Nat(0));
    CHECK(f.counting == Nat(1));
    CHECK(f.overflow2 == Nat(0));
    CHECK(f.verification == Nat(1));
    CHECK(f.overflow3 == Nat(0));
    CHECK(f.flag == Nat(0));

    BlockFields z = block_decompose(kExample, Nat(0));
    CHECK(z.encoding == Nat(0));
    CHECK(z.flag == Nat(0));

    CHECK_THROWS_AS(block_decompose(kExample, pow2(18)), OutOfRange);
}

TEST_CASE("layout validation") {
    BlockLayout bad;
    bad.counting_width = 0;
    CHECK_THROWS_AS(block_compose(bad, BlockValues{}), Error);
}

TEST_CASE("round trip over random layouts and values") {
    SplitMix64 rng(42);
    for (int iter = 0; iter < 500; ++iter) {
        BlockLayout layout;
        layout.encoding_width = 1 + rng.below(24);
        layout.overflow_width = 1 + rng.below(8);
        layout.counting_width = 1 + rng.below(8);
        layout.verification_width = 1 + rng.below(24);

        BlockValues v;
        v.encoding = Nat(rng.next()) & (pow2(layout.encoding_width) - 1);
        v.counting = Nat(rng.next()) & (pow2(layout.counting_width) - 1);
        v.verification = Nat(rng.next()) & (pow2(layout.verification_width) - 1);
        v.flag = rng.coin();

        Nat x = block_compose(layout, v);
        BlockFields f = block_decompose(layout, x);
        CHECK(f.encoding == v.encoding);
        CHECK(f.counting == v.counting);
        CHECK(f.verification == v.verification);
        CHECK(f.flag == Nat(v.flag));
        CHECK(f.overflow1 == Nat(0));
        CHECK(f.overflow2 == Nat(0));
        CHECK(f.overflow3 == Nat(0));
    }
}

TEST_CASE("field-wise additivity below the overflow capacity") {
    // Sums of composed numbers read back field-by-field through the extended
    // slices as long as every per-field sum stays inside field + overflow.
    SplitMix64 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        const std::size_t k = 1 + rng.below(24);
        BlockLayout layout;
        layout.encoding_width = 1 + rng.below(16);
        layout.counting_width = 1 + rng.below(6);
        layout.verification_width = 1 + rng.below(16);
        layout.overflow_width = static_cast<unsigned>(bit_length(Nat(k)) + 1);

        Nat enc_sum = 0, cnt_sum = 0, ver_sum = 0, flag_sum = 0, total = 0;
        for (std::size_t i = 0; i < k; ++i) {
            BlockValues v;
            v.encoding = Nat(rng.next()) & (pow2(layout.encoding_width) - 1);
            v.counting = Nat(rng.next()) & (pow2(layout.counting_width) - 1);
            v.verification = Nat(rng.next()) & (pow2(layout.verification_width) - 1);
            v.flag = rng.coin();
            enc_sum += v.encoding;
            cnt_sum += v.counting;
            ver_sum += v.verification;
            flag_sum += v.flag;
            total += block_compose(layout, v);
        }
        ExtendedSlices s = extended_slices(layout, total);
        CHECK(s.encoding == enc_sum);
        CHECK(s.counting == cnt_sum);
        CHECK(s.verification == ver_sum);
        CHECK(s.flag == flag_sum);
    }
}
