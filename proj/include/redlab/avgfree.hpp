#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "redlab/nat.hpp"

namespace redlab {

// Rational in (0, 1); construction knob trading set size against value range.
struct Rational {
    std::uint64_t num = 1;
    std::uint64_t den = 2;

    bool operator==(const Rational&) const = default;
};

// Parses "0.5", ".5" or "1/2". Throws Error unless the value lands in (0,1).
Rational parse_rational(const std::string& text);

// A set S such that for any m+1 elements (repeats allowed),
// s1 + ... + sm = m*s implies s1 = ... = sm = s.
struct AvgFreeSet {
    unsigned m = 2;
    std::vector<Nat> elements;  // strictly increasing
    Rational eps;

    Nat max_element() const { return elements.empty() ? Nat(0) : elements.back(); }
};

// A violating tuple found by the checker: elements[summands[0..m)] sum to
// m * elements[average], yet the m+1 of them are not all equal.
struct AvgFreeViolation {
    std::vector<std::size_t> summands;
    std::size_t average = 0;
};

struct AvgFreeCheck {
    bool ok = false;
    std::optional<AvgFreeViolation> violation;
};

// Digit-sphere construction. Always succeeds for m >= 2, size >= 1 and
// eps in (0,1); deterministic in its parameters. The produced maximum
// element satisfies the bound checked by avg_free_bound_holds below.
AvgFreeSet construct_avg_free(unsigned m, std::size_t size, Rational eps);

// Exhaustive decision procedure for the defining property. Enumerates size-m
// multisets plus an independent average candidate; refuses with TooLarge when
// |elements|^m > 10^8. Elements must be strictly increasing.
AvgFreeCheck is_avg_free(const std::vector<Nat>& elements, unsigned m);
AvgFreeCheck is_avg_free_serial(const std::vector<Nat>& elements, unsigned m);

// Documented value bound of construct_avg_free, with explicit constant
// c = 20:
//
//     max(S) <= m^(c/eps) * M^(1+eps)
//
// checked exactly in integers by raising both sides to the power eps.den.
bool avg_free_bound_holds(unsigned m, std::size_t size, Rational eps, const Nat& max_element);

}  // namespace redlab
