#include "redlab/blocks.hpp"

namespace redlab {

void validate(const BlockLayout& layout) {
    if (layout.encoding_width < 1 || layout.overflow_width < 1 || layout.counting_width < 1 ||
        layout.verification_width < 1)
        throw Error("block layout widths must all be >= 1");
}

namespace {

void check_fits(const Nat& value, unsigned width, const char* field) {
    if (bit_length(value) > width)
        throw FieldOverflow(std::string(field) + " value " + value.str() + " does not fit " +
                            std::to_string(width) + " bits");
}

}  // namespace

Nat block_compose(const BlockLayout& layout, const BlockValues& values) {
    validate(layout);
    check_fits(values.encoding, layout.encoding_width, "encoding");
    check_fits(values.counting, layout.counting_width, "counting");
    check_fits(values.verification, layout.verification_width, "verification");
    if (values.flag > 1)
        throw FieldOverflow("flag must be 0 or 1");

    Nat x = values.encoding;
    x += values.counting << layout.counting_offset();
    x += values.verification << layout.verification_offset();
    if (values.flag)
        x += pow2(layout.flag_offset());
    return x;
}

BlockFields block_decompose(const BlockLayout& layout, const Nat& x) {
    validate(layout);
    if (bit_length(x) > layout.total_bits())
        throw OutOfRange("value " + x.str() + " has more than " +
                         std::to_string(layout.total_bits()) + " bits");

    BlockFields f;
    std::size_t off = 0;
    f.encoding = slice_bits(x, off, layout.encoding_width);
    off += layout.encoding_width;
    f.overflow1 = slice_bits(x, off, layout.overflow_width);
    off += layout.overflow_width;
    f.counting = slice_bits(x, off, layout.counting_width);
    off += layout.counting_width;
    f.overflow2 = slice_bits(x, off, layout.overflow_width);
    off += layout.overflow_width;
    f.verification = slice_bits(x, off, layout.verification_width);
    off += layout.verification_width;
    f.overflow3 = slice_bits(x, off, layout.overflow_width);
    off += layout.overflow_width;
    f.flag = slice_bits(x, off, 1);
    return f;
}

ExtendedSlices extended_slices(const BlockLayout& layout, const Nat& x) {
    validate(layout);
    ExtendedSlices s;
    s.encoding = slice_bits(x, 0, layout.counting_offset());
    s.counting =
        slice_bits(x, layout.counting_offset(), layout.verification_offset() - layout.counting_offset());
    s.verification =
        slice_bits(x, layout.verification_offset(), layout.flag_offset() - layout.verification_offset());
    s.flag = x >> layout.flag_offset();
    return s;
}

}  // namespace redlab
