#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "redlab/errors.hpp"

namespace redlab {

// Arbitrary-precision non-negative integer. Merged targets exceed 64 bits
// already at desk scale, so every item value, target and block-encoded
// number lives in one of these. cpp_int is signed; values in this toolkit
// stay >= 0 because the only sign-producing operations go through
// parse_nat() and sub_exact() below.
using Nat = boost::multiprecision::cpp_int;

// Parses a decimal string. Rejects signs, whitespace and anything else that
// is not a plain run of digits.
Nat parse_nat(const std::string& text);

std::string to_decimal(const Nat& x);

inline Nat pow2(std::size_t k) {
    return Nat(1) << k;
}

// Bits needed to store x, i.e. ceil(log2(x+1)); 0 for x = 0.
inline std::size_t bit_length(const Nat& x) {
    return x.is_zero() ? 0 : static_cast<std::size_t>(boost::multiprecision::msb(x)) + 1;
}

inline bool test_bit(const Nat& x, std::size_t i) {
    return boost::multiprecision::bit_test(x, static_cast<unsigned>(i));
}

// Value of bits [offset, offset+width) of x.
Nat slice_bits(const Nat& x, std::size_t offset, std::size_t width);

// a - b; throws Error if b > a.
Nat sub_exact(const Nat& a, const Nat& b);

Nat nat_pow(const Nat& base, std::uint64_t exp);

// Present iff x fits in an unsigned 64-bit word.
std::optional<std::uint64_t> to_u64(const Nat& x);

// to_u64 or TooLarge with a context message.
std::uint64_t to_u64_or_throw(const Nat& x, const char* what);

}  // namespace redlab
