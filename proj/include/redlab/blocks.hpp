#pragma once

#include <cstddef>

#include "redlab/nat.hpp"

namespace redlab {

// Bit layout of a block-encoded integer: seven consecutive fields, starting
// at the least significant bit,
//
//     encoding | overflow | counting | overflow | verification | overflow | flag
//
// The payload fields carry an item value, a selected-item count and an
// instance identity; the zero-initialized overflow fields absorb the carries
// when many encoded numbers are summed; the single flag bit marks selector
// integers.
struct BlockLayout {
    unsigned encoding_width = 1;
    unsigned overflow_width = 1;
    unsigned counting_width = 1;
    unsigned verification_width = 1;

    std::size_t encoding_offset() const { return 0; }
    std::size_t counting_offset() const { return encoding_width + overflow_width; }
    std::size_t verification_offset() const {
        return counting_offset() + counting_width + overflow_width;
    }
    std::size_t flag_offset() const {
        return verification_offset() + verification_width + overflow_width;
    }
    std::size_t total_bits() const { return flag_offset() + 1; }

    bool operator==(const BlockLayout&) const = default;
};

// Throws Error unless every width is >= 1.
void validate(const BlockLayout& layout);

// Payload contents of one composed number. Overflow fields are always zero
// on construction, so they do not appear here.
struct BlockValues {
    Nat encoding;
    Nat counting;
    Nat verification;
    unsigned flag = 0;  // 0 or 1
};

// All seven fields of a decomposed value, in layout order.
struct BlockFields {
    Nat encoding;
    Nat overflow1;
    Nat counting;
    Nat overflow2;
    Nat verification;
    Nat overflow3;
    Nat flag;
};

// Each payload field together with the overflow region above it; the flag
// slice is open at the top. While every extended sum stays inside its
// region, addition of composed numbers acts field-wise.
struct ExtendedSlices {
    Nat encoding;
    Nat counting;
    Nat verification;
    Nat flag;
};

// encoding + counting*2^off_c + verification*2^off_v + flag*2^off_f.
// Throws FieldOverflow if any value exceeds its width.
Nat block_compose(const BlockLayout& layout, const BlockValues& values);

// Exact bit-slices of x at the layout offsets. Throws OutOfRange if
// x >= 2^total_bits.
BlockFields block_decompose(const BlockLayout& layout, const Nat& x);

ExtendedSlices extended_slices(const BlockLayout& layout, const Nat& x);

}  // namespace redlab
