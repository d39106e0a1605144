#include "redlab/avgfree.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace redlab {

Rational parse_rational(const std::string& text) {
    std::uint64_t num = 0, den = 0;
    auto slash = text.find('/');
    auto dot = text.find('.');
    try {
        if (slash != std::string::npos) {
            num = std::stoull(text.substr(0, slash));
            den = std::stoull(text.substr(slash + 1));
        } else if (dot != std::string::npos) {
            std::string head = text.substr(0, dot);
            std::string frac = text.substr(dot + 1);
            if (frac.empty() || frac.size() > 18)
                throw Error("cannot parse rational: \"" + text + "\"");
            den = 1;
            for (std::size_t i = 0; i < frac.size(); ++i)
                den *= 10;
            num = std::stoull(frac);
            if (!head.empty() && head != "0")
                throw Error("rational must be in (0,1): \"" + text + "\"");
        } else {
            throw Error("cannot parse rational: \"" + text + "\"");
        }
    } catch (const std::logic_error&) {
        throw Error("cannot parse rational: \"" + text + "\"");
    }
    if (num == 0 || den == 0 || num >= den)
        throw Error("rational must be in (0,1): \"" + text + "\"");
    std::uint64_t g = std::gcd(num, den);
    return Rational{num / g, den / g};
}

namespace {

void validate_params(unsigned m, std::size_t size, Rational eps) {
    if (m < 2)
        throw Error("m must be >= 2");
    if (size < 1)
        throw Error("size must be >= 1");
    if (eps.num == 0 || eps.den == 0 || eps.num >= eps.den)
        throw Error("eps must be a rational in (0,1)");
}

// Smallest q >= 1 with q^d >= size * (d*(q-1)^2 + 1): by pigeonhole over the
// d*(q-1)^2 + 1 possible squared norms, some norm class then holds at least
// `size` of the q^d digit vectors.
std::uint64_t minimal_digit_range(std::uint64_t d, std::size_t size) {
    auto feasible = [&](std::uint64_t q) {
        Nat lhs = nat_pow(Nat(q), d);
        Nat rhs = Nat(size) * (Nat(d) * (q - 1) * (q - 1) + 1);
        return lhs >= rhs;
    };
    std::uint64_t hi = 1;
    while (!feasible(hi))
        hi *= 2;
    std::uint64_t lo = hi / 2 + 1;
    if (hi == 1)
        return 1;
    while (lo < hi) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        if (feasible(mid))
            hi = mid;
        else
            lo = mid + 1;
    }
    return hi;
}

}  // namespace

// Digit vectors v in {0..q-1}^d are encoded as sum_i v[i]*B^i with base
// B = m*q + 1, so that neither an m-fold sum of encoded values nor m times
// one of them can carry between digits. All vectors sharing one squared
// Euclidean norm lie on a sphere; a sum of m of them can equal m times
// another only when all m+1 coincide (strict convexity), which makes every
// norm class average-free. We keep the most popular norm class and truncate
// to the requested size, taking numerically smallest encodings first.
AvgFreeSet construct_avg_free(unsigned m, std::size_t size, Rational eps) {
    validate_params(m, size, eps);

    // d - 2 = ceil(2/eps) digits of "slack" keep the value bound at
    // m^(20/eps) * size^(1+eps); see avg_free_bound_holds.
    const std::uint64_t d = (2 * eps.den + eps.num - 1) / eps.num + 2;
    const std::uint64_t q = minimal_digit_range(d, size);

    {
        // Enumeration cost is 2*q^d odometer steps.
        long double cost = 1.0L;
        for (std::uint64_t i = 0; i < d; ++i) {
            cost *= static_cast<long double>(q);
            if (cost > static_cast<long double>(1ull << 31))
                throw ResourceLimit("average-free construction would enumerate > 2^31 vectors");
        }
    }

    const std::uint64_t norm_values = d * (q - 1) * (q - 1) + 1;
    std::vector<std::uint64_t> counts(norm_values, 0);

    // Pass 1: histogram of squared norms, odometer order with digit 0 fastest.
    std::vector<std::uint64_t> v(d, 0);
    std::uint64_t norm = 0;
    for (;;) {
        ++counts[norm];
        std::uint64_t j = 0;
        while (j < d && v[j] == q - 1) {
            norm -= v[j] * v[j];
            v[j] = 0;
            ++j;
        }
        if (j == d)
            break;
        norm += 2 * v[j] + 1;  // (v+1)^2 - v^2
        ++v[j];
    }

    std::uint64_t best_norm = 0;
    for (std::uint64_t i = 1; i < norm_values; ++i)
        if (counts[i] > counts[best_norm])
            best_norm = i;
    if (counts[best_norm] < size)
        throw Error("internal: pigeonhole class smaller than requested size");

    // Pass 2: collect encoded values of the chosen class in ascending order.
    // Incrementing digit j wraps digits 0..j-1 from q-1 to 0, so the encoded
    // value changes by B^j - (q-1)*(B^(j-1)+...+B^0), precomputed per j.
    const Nat base = Nat(m) * q + 1;
    std::vector<Nat> step(d);
    {
        Nat power = 1;   // B^j
        Nat prefix = 0;  // B^0 + ... + B^(j-1)
        for (std::uint64_t j = 0; j < d; ++j) {
            step[j] = sub_exact(power, prefix * (q - 1));
            prefix += power;
            power *= base;
        }
    }

    std::vector<Nat> elements;
    elements.reserve(size);
    std::fill(v.begin(), v.end(), 0);
    norm = 0;
    Nat value = 0;
    for (;;) {
        if (norm == best_norm) {
            elements.push_back(value);
            if (elements.size() == size)
                break;
        }
        std::uint64_t j = 0;
        while (j < d && v[j] == q - 1) {
            norm -= v[j] * v[j];
            v[j] = 0;
            ++j;
        }
        if (j == d)
            break;
        norm += 2 * v[j] + 1;
        value += step[j];
        ++v[j];
    }

    AvgFreeSet out;
    out.m = m;
    out.elements = std::move(elements);
    out.eps = eps;
    return out;
}

namespace {

// First violation for a fixed average index, multiset indices explored in
// lexicographic order. V is uint64_t when everything fits a word, Nat
// otherwise; the two paths run the same search.
template <typename V>
bool violation_rec(const std::vector<V>& vals, unsigned remaining, std::size_t start,
                   const V& partial, const V& target, std::size_t avg,
                   std::vector<std::size_t>& chosen) {
    if (remaining == 0) {
        if (partial != target)
            return false;
        bool all_equal =
            std::all_of(chosen.begin(), chosen.end(), [&](std::size_t c) { return c == avg; });
        return !all_equal;
    }
    const V& max_val = vals.back();
    for (std::size_t i = start; i < vals.size(); ++i) {
        V with = partial + vals[i];
        V low = with + vals[i] * (remaining - 1);
        if (low > target)
            break;
        V high = with + max_val * (remaining - 1);
        if (high < target)
            continue;
        chosen.push_back(i);
        if (violation_rec(vals, remaining - 1, i, with, target, avg, chosen))
            return true;
        chosen.pop_back();
    }
    return false;
}

template <typename V>
std::optional<AvgFreeViolation> check_average(const std::vector<V>& vals, unsigned m,
                                              std::size_t avg) {
    V target = vals[avg] * m;
    std::vector<std::size_t> chosen;
    chosen.reserve(m);
    if (violation_rec(vals, m, 0, V(0), target, avg, chosen))
        return AvgFreeViolation{std::move(chosen), avg};
    return std::nullopt;
}

template <typename V>
AvgFreeCheck run_check(const std::vector<V>& vals, unsigned m, bool parallel) {
    const std::size_t n = vals.size();
    std::optional<AvgFreeViolation> best;

    if (!parallel) {
        for (std::size_t j = 0; j < n; ++j) {
            best = check_average(vals, m, j);
            if (best)
                break;
        }
    } else {
#ifdef _OPENMP
        std::size_t best_j = n;
#pragma omp parallel for schedule(dynamic)
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t current;
#pragma omp atomic read
            current = best_j;
            if (j > current)
                continue;
            auto v = check_average(vals, m, j);
            if (v) {
#pragma omp critical
                {
                    if (j < best_j) {
                        best_j = j;
                        best = std::move(v);
                    }
                }
            }
        }
#else
        return run_check(vals, m, false);
#endif
    }

    if (best)
        return AvgFreeCheck{false, std::move(best)};
    return AvgFreeCheck{true, std::nullopt};
}

AvgFreeCheck check_entry(const std::vector<Nat>& elements, unsigned m, bool parallel) {
    if (m < 2)
        throw Error("m must be >= 2");
    for (std::size_t i = 1; i < elements.size(); ++i)
        if (!(elements[i - 1] < elements[i]))
            throw Error("elements must be strictly increasing");
    // Enumeration guard from the contract: refuse beyond |S|^m = 10^8.
    {
        long double cost = 1.0L;
        for (unsigned i = 0; i < m; ++i)
            cost *= static_cast<long double>(std::max<std::size_t>(elements.size(), 1));
        if (cost > 1e8L)
            throw TooLarge("average-free check needs |elements|^m <= 10^8");
    }
    if (elements.empty())
        return AvgFreeCheck{true, std::nullopt};

    // Word-sized fast path whenever m * max fits 64 bits.
    const Nat& max_el = elements.back();
    if (auto mx = to_u64(max_el); mx && *mx <= std::numeric_limits<std::uint64_t>::max() / m) {
        std::vector<std::uint64_t> vals(elements.size());
        for (std::size_t i = 0; i < elements.size(); ++i)
            vals[i] = to_u64(elements[i]).value();
        return run_check(vals, m, parallel);
    }
    return run_check(elements, m, parallel);
}

}  // namespace

AvgFreeCheck is_avg_free(const std::vector<Nat>& elements, unsigned m) {
    return check_entry(elements, m, true);
}

AvgFreeCheck is_avg_free_serial(const std::vector<Nat>& elements, unsigned m) {
    return check_entry(elements, m, false);
}

// Why c = 20 suffices for d = ceil(2/eps)+2, writing k = d-2 >= 2/eps:
// the minimal q is at most ceil((dM)^(1/k)) <= 2(dM)^(1/k), every element is
// below B^d/m <= 2^d m^(d-1) q^d, and q^d <= 2^d (dM)^(1+2/k) with
// 2/k <= eps. Folding 4^d <= m^(10/eps), m^(d-1) <= m^(5/eps) and
// d^(1+2/k) <= d^2 <= m^(5/eps) (all using m >= 2, d <= 5/eps) gives
// max(S) < m^(20/eps) * M^(1+eps).
bool avg_free_bound_holds(unsigned m, std::size_t size, Rational eps, const Nat& max_element) {
    validate_params(m, size, eps);
    const std::uint64_t c = 20;
    const std::uint64_t e1 = (c * eps.den + eps.num - 1) / eps.num;  // ceil(c/eps)
    // Compare max^den <= m^(e1*den) * M^(den+num).
    Nat lhs = nat_pow(max_element, eps.den);
    Nat rhs = nat_pow(Nat(m), e1 * eps.den) * nat_pow(Nat(size), eps.den + eps.num);
    return lhs <= rhs;
}

}  // namespace redlab
