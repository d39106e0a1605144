#include "redlab/nat.hpp"

#include <limits>

namespace redlab {

Nat parse_nat(const std::string& text) {
    if (text.empty())
        throw Error("empty string is not a number");
    for (char c : text) {
        if (c < '0' || c > '9')
            throw Error("not a non-negative decimal integer: \"" + text + "\"");
    }
    return Nat(text);
}

std::string to_decimal(const Nat& x) {
    return x.str();
}

Nat slice_bits(const Nat& x, std::size_t offset, std::size_t width) {
    Nat r = x >> offset;
    r &= pow2(width) - 1;
    return r;
}

Nat sub_exact(const Nat& a, const Nat& b) {
    if (b > a)
        throw Error("subtraction underflow: " + a.str() + " - " + b.str());
    return a - b;
}

Nat nat_pow(const Nat& base, std::uint64_t exp) {
    Nat result = 1;
    Nat b = base;
    while (exp > 0) {
        if (exp & 1)
            result *= b;
        exp >>= 1;
        if (exp > 0)
            b *= b;
    }
    return result;
}

std::optional<std::uint64_t> to_u64(const Nat& x) {
    if (x > std::numeric_limits<std::uint64_t>::max())
        return std::nullopt;
    return x.convert_to<std::uint64_t>();
}

std::uint64_t to_u64_or_throw(const Nat& x, const char* what) {
    auto v = to_u64(x);
    if (!v)
        throw TooLarge(std::string(what) + ": value " + x.str() + " exceeds 64 bits");
    return *v;
}

}  // namespace redlab
