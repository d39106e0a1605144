#include "redlab/solvers.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <unordered_set>

#include <boost/functional/hash.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace redlab {

namespace {

constexpr std::uint64_t kMaxTableBits = 1'000'000'000;  // decision-mode bit table
constexpr std::uint64_t kMaxWitnessTarget = std::uint64_t(1) << 26;
constexpr std::size_t kBruteMaxItems = 26;

// Bits above the target in the table's top word are meaningless; keep them
// permanently zero so the first-setter array is never indexed past t.
std::uint64_t top_word_mask(std::uint64_t t) {
    const unsigned used = t % 64 + 1;
    return used == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << used) - 1;
}

// In-place row |= row << x, walking words downwards so every read still sees
// the pre-shift row.
void shift_or_serial(std::vector<std::uint64_t>& row, std::uint64_t x, std::uint64_t top_mask,
                     std::vector<std::uint32_t>* first_setter, std::uint32_t item) {
    const std::size_t words = row.size();
    const std::size_t q = x / 64;
    const unsigned r = x % 64;
    for (std::size_t w = words; w-- > q;) {
        std::uint64_t val = row[w - q] << r;
        if (r != 0 && w - q > 0)
            val |= row[w - q - 1] >> (64 - r);
        if (w == words - 1)
            val &= top_mask;
        std::uint64_t nb = val & ~row[w];
        if (first_setter && nb) {
            std::uint64_t bits = nb;
            while (bits) {
                unsigned b = std::countr_zero(bits);
                bits &= bits - 1;
                (*first_setter)[w * 64 + b] = item;
            }
        }
        row[w] |= val;
    }
}

void shift_or_parallel(std::vector<std::uint64_t>& row, std::vector<std::uint64_t>& scratch,
                       std::uint64_t x, std::uint64_t top_mask,
                       std::vector<std::uint32_t>* first_setter, std::uint32_t item) {
    const std::ptrdiff_t words = static_cast<std::ptrdiff_t>(row.size());
    const std::ptrdiff_t q = static_cast<std::ptrdiff_t>(x / 64);
    const unsigned r = x % 64;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t w = 0; w < words; ++w) {
        std::uint64_t val = 0;
        if (w >= q) {
            val = row[w - q] << r;
            if (r != 0 && w - q > 0)
                val |= row[w - q - 1] >> (64 - r);
        }
        if (w == words - 1)
            val &= top_mask;
        std::uint64_t merged = row[w] | val;
        std::uint64_t nb = merged & ~row[w];
        if (first_setter && nb) {
            std::uint64_t bits = nb;
            while (bits) {
                unsigned b = std::countr_zero(bits);
                bits &= bits - 1;
                (*first_setter)[static_cast<std::size_t>(w) * 64 + b] = item;
            }
        }
        scratch[w] = merged;
    }
    row.swap(scratch);
}

SubsetDecision dp_impl(const SubsetSumInstance& inst, bool want_witness, bool parallel) {
    const Nat& target = inst.target;
    if (bit_length(target) >= 63 || to_u64(target).value_or(std::uint64_t(-1)) + 1 > kMaxTableBits)
        throw ResourceLimit("subset-sum DP table would exceed the bit-table guard");
    const std::uint64_t t = to_u64(target).value();
    if (want_witness && t >= kMaxWitnessTarget)
        throw ResourceLimit("subset-sum DP witness mode is limited to targets < 2^26");

    std::vector<std::uint64_t> items64;
    std::vector<std::size_t> item_index;
    for (std::size_t i = 0; i < inst.items.size(); ++i) {
        const Nat& x = inst.items[i];
        if (x.is_zero() || x > target)
            continue;  // zeros never matter; oversized items never fit
        items64.push_back(to_u64(x).value());
        item_index.push_back(i);
    }

    const std::size_t words = static_cast<std::size_t>(t / 64 + 1);
    std::vector<std::uint64_t> row(words, 0), scratch;
    if (parallel)
        scratch.assign(words, 0);
    row[0] = 1;

    std::vector<std::uint32_t> first_setter;
    if (want_witness)
        first_setter.assign(t + 1, std::numeric_limits<std::uint32_t>::max());

    auto done = [&] { return (row[t / 64] >> (t % 64)) & 1; };

    SubsetDecision out;
    if (t == 0) {
        out.yes = true;
        return out;
    }
    // Parallel word updates only pay off on big tables.
    const bool use_parallel = parallel && words >= (std::size_t(1) << 12);
    if (parallel && !use_parallel)
        scratch.clear();
    const std::uint64_t top_mask = top_word_mask(t);
    for (std::uint32_t i = 0; i < items64.size() && !done(); ++i) {
        if (use_parallel)
            shift_or_parallel(row, scratch, items64[i], top_mask,
                              want_witness ? &first_setter : nullptr, i);
        else
            shift_or_serial(row, items64[i], top_mask, want_witness ? &first_setter : nullptr, i);
    }
    out.yes = done();
    if (out.yes && want_witness) {
        // Each first-setter points strictly backwards, so the chain walks a
        // set of distinct items down to the empty sum.
        std::uint64_t j = t;
        while (j != 0) {
            std::uint32_t i = first_setter[j];
            if (i == std::numeric_limits<std::uint32_t>::max())
                throw Error("internal: broken back-pointer chain in subset-sum DP");
            out.witness.push_back(item_index[i]);
            j -= items64[i];
        }
        std::sort(out.witness.begin(), out.witness.end());
    }
    return out;
}

}  // namespace

SubsetDecision solve_subset_sum_dp(const SubsetSumInstance& inst, bool want_witness) {
#ifdef _OPENMP
    return dp_impl(inst, want_witness, true);
#else
    return dp_impl(inst, want_witness, false);
#endif
}

SubsetDecision solve_subset_sum_dp_serial(const SubsetSumInstance& inst, bool want_witness) {
    return dp_impl(inst, want_witness, false);
}

namespace {

// Ascending-mask enumeration with O(1) incremental sums: stepping from
// mask-1 to mask clears the trailing ones and sets bit ctz(mask), so the
// running sum changes by items[k] - prefix[k].
SubsetDecision brute_u64(const std::vector<std::uint64_t>& items, std::uint64_t target,
                         bool parallel) {
    const unsigned n = static_cast<unsigned>(items.size());
    std::vector<std::uint64_t> prefix(n + 1, 0);
    for (unsigned i = 0; i < n; ++i)
        prefix[i + 1] = prefix[i] + items[i];

    const std::uint64_t total = std::uint64_t(1) << n;
    constexpr std::uint64_t kNoMask = std::numeric_limits<std::uint64_t>::max();

    if (target == 0)
        return SubsetDecision{true, {}};

    std::uint64_t best = kNoMask;
    auto scan_chunk = [&](std::uint64_t lo, std::uint64_t hi, std::uint64_t& found) {
        std::uint64_t sum = 0;
        for (unsigned b = 0; b < n; ++b)
            if ((lo >> b) & 1)
                sum += items[b];
        if (lo != 0 && sum == target) {
            found = lo;
            return;
        }
        for (std::uint64_t mask = lo + 1; mask < hi; ++mask) {
            unsigned k = std::countr_zero(mask);
            sum += items[k] - prefix[k];
            if (sum == target) {
                found = mask;
                return;
            }
        }
        found = kNoMask;
    };

    if (!parallel || total < (std::uint64_t(1) << 16)) {
        scan_chunk(0, total, best);
    } else {
#ifdef _OPENMP
        const std::uint64_t chunks = 64;
        const std::uint64_t step = (total + chunks - 1) / chunks;
#pragma omp parallel for schedule(dynamic)
        for (std::uint64_t c = 0; c < chunks; ++c) {
            std::uint64_t lo = c * step;
            std::uint64_t current;
#pragma omp atomic read
            current = best;
            if (lo >= total || lo > current)
                continue;
            std::uint64_t found;
            scan_chunk(lo, std::min(lo + step, total), found);
            if (found != kNoMask) {
#pragma omp critical
                if (found < best)
                    best = found;
            }
        }
#else
        scan_chunk(0, total, best);
#endif
    }

    SubsetDecision out;
    if (best != kNoMask) {
        out.yes = true;
        for (unsigned b = 0; b < n; ++b)
            if ((best >> b) & 1)
                out.witness.push_back(b);
    }
    return out;
}

// Big-value fallback; enumerates in the same ascending-mask order by
// deciding the highest index first and preferring exclusion.
bool brute_nat_rec(const std::vector<Nat>& items, const std::vector<Nat>& prefix,
                   std::size_t idx, Nat cur, const Nat& target, std::vector<std::size_t>& chosen) {
    if (cur > target)
        return false;
    if (cur + prefix[idx] < target)
        return false;
    if (idx == 0)
        return cur == target;
    if (brute_nat_rec(items, prefix, idx - 1, cur, target, chosen))
        return true;
    chosen.push_back(idx - 1);
    if (brute_nat_rec(items, prefix, idx - 1, cur + items[idx - 1], target, chosen))
        return true;
    chosen.pop_back();
    return false;
}

SubsetDecision brute_impl(const SubsetSumInstance& inst, bool parallel) {
    if (inst.items.size() > kBruteMaxItems)
        throw TooLarge("brute-force subset sum handles at most 26 items");

    Nat total = inst.item_sum();
    if (to_u64(total) && to_u64(inst.target)) {
        std::vector<std::uint64_t> items(inst.items.size());
        for (std::size_t i = 0; i < items.size(); ++i)
            items[i] = to_u64(inst.items[i]).value();
        return brute_u64(items, to_u64(inst.target).value(), parallel);
    }

    if (inst.target > total)
        return {};
    std::vector<Nat> prefix(inst.items.size() + 1, Nat(0));
    for (std::size_t i = 0; i < inst.items.size(); ++i)
        prefix[i + 1] = prefix[i] + inst.items[i];
    std::vector<std::size_t> chosen;
    SubsetDecision out;
    if (brute_nat_rec(inst.items, prefix, inst.items.size(), Nat(0), inst.target, chosen)) {
        out.yes = true;
        std::sort(chosen.begin(), chosen.end());
        out.witness = std::move(chosen);
    }
    return out;
}

}  // namespace

SubsetDecision brute_subset_sum(const SubsetSumInstance& inst) {
#ifdef _OPENMP
    return brute_impl(inst, true);
#else
    return brute_impl(inst, false);
#endif
}

SubsetDecision brute_subset_sum_serial(const SubsetSumInstance& inst) {
    return brute_impl(inst, false);
}

namespace {

template <typename V>
struct StateKey {
    std::uint32_t idx;
    V rem;
    bool operator==(const StateKey&) const = default;
};

template <typename V>
struct StateHash {
    std::size_t operator()(const StateKey<V>& k) const {
        std::size_t h = boost::hash<V>{}(k.rem);
        boost::hash_combine(h, k.idx);
        return h;
    }
};

template <typename V>
class ExactSearch {
  public:
    ExactSearch(std::vector<V> values, std::vector<std::size_t> order, V target,
                std::uint64_t node_limit)
        : values_(std::move(values)), order_(std::move(order)), target_(std::move(target)),
          node_limit_(node_limit) {
        suffix_.assign(values_.size() + 1, V(0));
        for (std::size_t i = values_.size(); i-- > 0;)
            suffix_[i] = suffix_[i + 1] + values_[i];
    }

    std::optional<std::vector<std::size_t>> run() {
        chosen_.clear();
        if (dfs(0, target_))
            return chosen_;
        return std::nullopt;
    }

  private:
    bool dfs(std::uint32_t idx, V rem) {
        if (rem == V(0))
            return true;
        if (idx == values_.size())
            return false;
        if (suffix_[idx] < rem)
            return false;
        StateKey<V> key{idx, rem};
        if (dead_.contains(key))
            return false;
        if (++nodes_ > node_limit_)
            throw ResourceLimit("exact subset-sum search exceeded its node budget");

        if (values_[idx] <= rem) {
            chosen_.push_back(order_[idx]);
            if (dfs(idx + 1, rem - values_[idx]))
                return true;
            chosen_.pop_back();
        }
        // Excluding one of several equal values excludes them all; the
        // include branch above already covered "use the first of them".
        std::uint32_t next = idx + 1;
        while (next < values_.size() && values_[next] == values_[idx])
            ++next;
        if (dfs(next, rem))
            return true;
        dead_.insert(key);
        return false;
    }

    std::vector<V> values_;
    std::vector<std::size_t> order_;
    std::vector<V> suffix_;
    V target_;
    std::uint64_t node_limit_;
    std::uint64_t nodes_ = 0;
    std::vector<std::size_t> chosen_;
    std::unordered_set<StateKey<V>, StateHash<V>> dead_;
};

template <typename V>
SubsetDecision exact_run(std::vector<V> values, std::vector<std::size_t> order, V target,
                         std::uint64_t node_limit) {
    ExactSearch<V> search(std::move(values), std::move(order), std::move(target), node_limit);
    auto witness = search.run();
    SubsetDecision out;
    if (witness) {
        out.yes = true;
        out.witness = std::move(*witness);
        std::sort(out.witness.begin(), out.witness.end());
    }
    return out;
}

}  // namespace

SubsetDecision solve_subset_sum_exact(const SubsetSumInstance& inst, std::uint64_t node_limit) {
    if (inst.target.is_zero())
        return SubsetDecision{true, {}};

    // Zeros never decide anything and only widen the search.
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < inst.items.size(); ++i)
        if (!inst.items[i].is_zero() && inst.items[i] <= inst.target)
            order.push_back(i);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (inst.items[a] != inst.items[b])
            return inst.items[a] > inst.items[b];
        return a < b;
    });

    Nat total = 0;
    for (std::size_t i : order)
        total += inst.items[i];
    if (total < inst.target)
        return {};

    if (to_u64(total)) {
        std::vector<std::uint64_t> values(order.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            values[i] = to_u64(inst.items[order[i]]).value();
        return exact_run(std::move(values), std::move(order), to_u64(inst.target).value(),
                         node_limit);
    }
    std::vector<Nat> values(order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        values[i] = inst.items[order[i]];
    return exact_run(std::move(values), std::move(order), inst.target, node_limit);
}

bool feasible_early_set(const std::vector<std::pair<Nat, Nat>>& jobs) {
    std::vector<std::size_t> order(jobs.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return jobs[a].second < jobs[b].second; });
    Nat completion = 0;
    for (std::size_t i : order) {
        completion += jobs[i].first;
        if (completion > jobs[i].second)
            return false;
    }
    return true;
}

WeightedTardyResult solve_weighted_tardy_dp(const std::vector<std::tuple<Nat, Nat, Nat>>& jobs,
                                            bool want_witness) {
    const std::size_t n = jobs.size();
    WeightedTardyResult out;
    out.min_tardy_weight = 0;
    if (n == 0)
        return out;

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::get<1>(jobs[a]) < std::get<1>(jobs[b]);
    });

    Nat total_p = 0, max_d = 0, total_w_nat = 0;
    for (const auto& [p, d, w] : jobs) {
        total_p += p;
        max_d = std::max(max_d, d);
        total_w_nat += w;
    }
    const Nat cap_nat = std::min(total_p, max_d);
    constexpr std::uint64_t kMaxCells = 20'000'000;
    auto cap64 = to_u64(cap_nat);
    if (!cap64 || *cap64 + 1 > kMaxCells)
        throw ResourceLimit("weighted-tardy DP table would exceed its cell guard");
    if (total_w_nat > std::numeric_limits<std::int64_t>::max())
        throw ResourceLimit("weighted-tardy DP needs weights that sum within 63 bits");
    const std::size_t cap = static_cast<std::size_t>(*cap64);

    std::vector<std::uint64_t> p64(n), d64(n);
    std::vector<std::int64_t> w64(n);
    for (std::size_t i = 0; i < n; ++i) {
        p64[i] = to_u64_or_throw(std::get<0>(jobs[i]), "processing time");
        d64[i] = to_u64_or_throw(std::get<1>(jobs[i]), "due date");
        w64[i] = static_cast<std::int64_t>(to_u64_or_throw(std::get<2>(jobs[i]), "weight"));
    }

    // best[q] = max early weight over EDD-feasible early sets with total
    // processing time exactly q; -1 marks unreachable.
    std::vector<std::int64_t> best(cap + 1, -1);
    best[0] = 0;
    std::vector<std::vector<std::int64_t>> snapshots;
    if (want_witness) {
        if ((n + 1) * (cap + 1) > 25'000'000)
            throw ResourceLimit("weighted-tardy witness snapshots would exceed their guard");
        snapshots.reserve(n + 1);
        snapshots.push_back(best);
    }
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t j = order[k];
        const std::size_t p = static_cast<std::size_t>(p64[j]);
        const std::size_t hi = static_cast<std::size_t>(std::min<std::uint64_t>(d64[j], cap));
        if (p != 0 && p <= hi) {
            // Descending q: each job extends an early prefix at most once.
            for (std::size_t q = hi - p;; --q) {
                if (best[q] >= 0 && best[q] + w64[j] > best[q + p])
                    best[q + p] = best[q] + w64[j];
                if (q == 0)
                    break;
            }
        } else if (p == 0) {
            // p = 0: the early prefix is unchanged, only its weight grows.
            for (std::size_t q = 0; q <= hi; ++q)
                if (best[q] >= 0 && w64[j] > 0)
                    best[q] += w64[j];
        }
        if (want_witness)
            snapshots.push_back(best);
    }

    std::int64_t best_w = 0;
    std::size_t best_q = 0;
    for (std::size_t q = 0; q <= cap; ++q)
        if (best[q] > best_w) {
            best_w = best[q];
            best_q = q;
        }

    std::int64_t total_w = 0;
    for (std::size_t i = 0; i < n; ++i)
        total_w += w64[i];
    out.min_tardy_weight = Nat(static_cast<std::uint64_t>(total_w - best_w));

    if (want_witness) {
        std::size_t q = best_q;
        for (std::size_t k = n; k-- > 0;) {
            if (snapshots[k + 1][q] != snapshots[k][q]) {
                out.early_set.push_back(order[k]);
                q -= static_cast<std::size_t>(p64[order[k]]);
            }
        }
        std::sort(out.early_set.begin(), out.early_set.end());
    }
    return out;
}

ScheduleResult solve_scheduling(const SchedulingDecision& dec, bool force_oracle) {
    const bool dp_route =
        !force_oracle && (dec.problem == Problem::OneSumWjUj ||
                          ((dec.problem == Problem::OneRejSumUj ||
                            dec.problem == Problem::OneRejTmax) &&
                           dec.threshold.is_zero() && dec.rejection_budget.has_value()));
    if (!dp_route)
        return brute_schedule(dec);

    std::vector<std::tuple<Nat, Nat, Nat>> jobs;
    jobs.reserve(dec.jobs.size());
    for (const Job& j : dec.jobs) {
        if (!j.d || !j.w)
            throw Error("job is missing a due date or weight");
        jobs.emplace_back(j.p, *j.d, *j.w);
    }
    WeightedTardyResult r = solve_weighted_tardy_dp(jobs);

    // 1-SumWjUj asks for tardy weight <= threshold; the rejection problems at
    // threshold 0 ask for rejectable weight <= budget, which is the same
    // optimum compared against a different bound.
    const Nat& bound =
        dec.problem == Problem::OneSumWjUj ? dec.threshold : dec.rejection_budget.value();
    ScheduleResult out;
    out.yes = r.min_tardy_weight <= bound;
    if (!out.yes)
        return out;

    ScheduleWitness w;
    w.placement.assign(dec.jobs.size(), std::nullopt);
    std::vector<bool> early(dec.jobs.size(), false);
    for (std::size_t i : r.early_set)
        early[i] = true;
    std::vector<std::size_t> order(dec.jobs.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return *dec.jobs[a].d < *dec.jobs[b].d; });
    Nat clock = 0;
    for (std::size_t i : order) {
        if (!early[i])
            continue;
        w.placement[i] = std::make_pair(0, clock);
        clock += dec.jobs[i].p;
    }
    for (std::size_t i : order) {
        if (early[i])
            continue;
        if (has_rejection(dec.problem)) {
            w.rejected.push_back(i);
        } else {
            w.placement[i] = std::make_pair(0, clock);
            clock += dec.jobs[i].p;
        }
    }
    std::sort(w.rejected.begin(), w.rejected.end());
    out.witness = std::move(w);
    return out;
}

}  // namespace redlab
