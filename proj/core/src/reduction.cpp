#include "icsched/reduction.hpp"

#include <algorithm>
#include <stdexcept>

#include "icsched/analysis.hpp"

namespace ics {

namespace {

constexpr std::int64_t kArithmeticLimit = std::int64_t{1} << 62;

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    const __int128 r = static_cast<__int128>(a) * b;
    if (r >= kArithmeticLimit)
        throw std::overflow_error("reduction arithmetic exceeds 62-bit range");
    return static_cast<std::int64_t>(r);
}

}  // namespace

ReductionOutput reduce_bin_packing(const BinPackingInstance& bp, int c) {
    const auto n = static_cast<std::int64_t>(bp.items.size());
    const std::int64_t m = bp.bins;
    if (n < 2) throw std::invalid_argument("reduction requires at least 2 items");
    if (m < 1 || m > n) throw std::invalid_argument("reduction requires 1 <= bins <= items");
    if (c < 1) throw std::invalid_argument("reduction requires c >= 1");
    if (bp.volume < 1) throw std::invalid_argument("bin volume must be >= 1");
    for (const std::int64_t a : bp.items)
        if (a < 1) throw std::invalid_argument("items must be >= 1");

    ReductionOutput out;
    for (const std::int64_t a : bp.items) {
        out.a_sum += a;
        if (out.a_sum >= kArithmeticLimit)
            throw std::overflow_error("item sum exceeds 62-bit range");
    }
    std::int64_t big_b = out.a_sum;
    for (int k = 0; k < c; ++k) big_b = checked_mul(big_b, m * n);
    out.big_b = big_b;
    // B = (m*n)^c * A >= 2A since m*n >= 2.

    out.instance.machines = static_cast<int>(m);
    if (bp.volume > out.a_sum) {
        // Everything fits into a single bin; emit a fixed feasible instance.
        out.trivial = true;
        out.instance.jobs.push_back({0, 0, 1, 1});
        return out;
    }

    checked_mul(n, big_b);  // largest deadline must stay in range
    for (std::int64_t i = 1; i <= n; ++i) {
        const std::int64_t a_i = bp.items[static_cast<std::size_t>(i - 1)];
        const Time release = (i - 1) * big_b;
        const Time deadline = i * big_b + (i < n ? out.a_sum : bp.volume);
        for (std::int64_t k = 1; k <= m; ++k) {
            Job job;
            job.id = (i - 1) * m + (k - 1);
            job.release = release;
            job.deadline = deadline;
            job.processing = k == 1 ? big_b + a_i : big_b;
            out.job_map[{static_cast<int>(i), static_cast<int>(k)}] = job.id;
            out.instance.jobs.push_back(job);
        }
    }
    return out;
}

ReductionProperties verify_reduction(const BinPackingInstance& bp, const ReductionOutput& out,
                                     int c) {
    ReductionProperties props;
    if (out.trivial) {
        props.vacuous = true;
        return props;
    }

    const auto n = static_cast<std::int64_t>(bp.items.size());
    const std::int64_t m = bp.bins;
    props.job_count = static_cast<std::int64_t>(out.instance.jobs.size());
    props.job_count_ok = props.job_count == m * n;

    const InstanceProfile p = profile(out.instance);
    std::int64_t mn_pow = 1;
    for (int k = 0; k < c; ++k) mn_pow = checked_mul(mn_pow, m * n);
    props.looseness = p.looseness;
    props.looseness_cap = Rational(mn_pow + 1, mn_pow);  // 1 + (m*n)^-c
    props.looseness_ok = p.looseness <= props.looseness_cap;

    props.height = p.height;
    props.height_cap = 2 * m;
    props.height_ok = p.height <= props.height_cap;

    // Agreeable deadlines: t_j < t_k implies d_j <= d_k.
    std::vector<std::pair<Time, Time>> windows;
    windows.reserve(out.instance.jobs.size());
    for (const Job& j : out.instance.jobs) windows.emplace_back(j.release, j.deadline);
    std::sort(windows.begin(), windows.end());
    props.agreeable_ok = true;
    Time max_deadline_before = 0;
    for (std::size_t i = 0; i < windows.size();) {
        std::size_t k = i;
        Time group_min = windows[i].second, group_max = windows[i].second;
        while (k < windows.size() && windows[k].first == windows[i].first) {
            group_min = std::min(group_min, windows[k].second);
            group_max = std::max(group_max, windows[k].second);
            ++k;
        }
        if (i > 0 && group_min < max_deadline_before) props.agreeable_ok = false;
        max_deadline_before = std::max(max_deadline_before, group_max);
        i = k;
    }
    return props;
}

Schedule schedule_from_partition(const BinPackingInstance& bp, const ReductionOutput& out,
                                 const BinPartition& partition) {
    if (out.trivial) throw std::invalid_argument("trivial reduction has no translation");
    const auto n = static_cast<std::int64_t>(bp.items.size());
    const std::int64_t m = bp.bins;
    if (partition.size() != static_cast<std::size_t>(m))
        throw std::invalid_argument("partition must have one part per bin");

    // bin index (0-based) of each item
    std::vector<int> bin_of(static_cast<std::size_t>(n), -1);
    for (std::size_t k = 0; k < partition.size(); ++k)
        for (const std::size_t item : partition[k]) {
            if (item >= static_cast<std::size_t>(n) || bin_of[item] != -1)
                throw std::invalid_argument("partition is not a partition of the items");
            bin_of[item] = static_cast<int>(k);
        }
    for (const int b : bin_of)
        if (b == -1) throw std::invalid_argument("partition misses an item");

    // prefix[k] = sum of items in bin k among items 1..i-1, updated per group
    std::vector<std::int64_t> prefix(static_cast<std::size_t>(m), 0);
    Schedule schedule;
    for (std::int64_t i = 1; i <= n; ++i) {
        const int carrier_bin = bin_of[static_cast<std::size_t>(i - 1)];
        // copy 1 (the carrier) runs on its item's bin; the rest fill the
        // remaining machines in increasing order
        int next_other = 0;
        for (std::int64_t k = 1; k <= m; ++k) {
            int machine;  // 0-based
            if (k == 1) {
                machine = carrier_bin;
            } else {
                if (next_other == carrier_bin) ++next_other;
                machine = next_other++;
            }
            const Time start = (i - 1) * out.big_b + prefix[static_cast<std::size_t>(machine)];
            schedule.placements.push_back(
                {out.job_map.at({static_cast<int>(i), static_cast<int>(k)}), machine + 1, start});
        }
        prefix[static_cast<std::size_t>(carrier_bin)] += bp.items[static_cast<std::size_t>(i - 1)];
    }
    return schedule;
}

}  // namespace ics
