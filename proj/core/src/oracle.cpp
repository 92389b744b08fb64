#include "icsched/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "icsched/errors.hpp"

namespace ics {

namespace {

// Greedy left-shifted placement of one machine's ordered job sequence.
// Returns false as soon as a deadline is missed; on success appends the
// placements (1-based machine index).
bool place_sequence(const Instance& instance, const std::vector<std::size_t>& sequence,
                    int machine, Schedule* out) {
    Time ready = 0;
    for (const std::size_t idx : sequence) {
        const Job& j = instance.jobs[idx];
        const Time start = std::max(ready, j.release);
        if (start + j.processing > j.deadline) return false;
        if (out) out->placements.push_back({j.id, machine, start});
        ready = start + j.processing;
    }
    return true;
}

// Tries every execution order on each machine for one fixed assignment.
bool orders_feasible(const Instance& instance,
                     const std::vector<std::vector<std::size_t>>& machines,
                     std::size_t machine, Schedule* witness) {
    if (machine == machines.size()) return true;
    std::vector<std::size_t> sequence = machines[machine];
    std::sort(sequence.begin(), sequence.end());
    do {
        Schedule local;
        Schedule* sink = witness ? &local : nullptr;
        if (!place_sequence(instance, sequence, static_cast<int>(machine) + 1, sink))
            continue;
        if (orders_feasible(instance, machines, machine + 1, witness)) {
            if (witness)
                witness->placements.insert(witness->placements.end(),
                                           local.placements.begin(), local.placements.end());
            return true;
        }
    } while (std::next_permutation(sequence.begin(), sequence.end()));
    return false;
}

// Assigns jobs to machines in id order. Machine symmetry is pruned by never
// opening machine k+1 before machine k (restricted growth).
bool assign_jobs(const Instance& instance, std::size_t job,
                 std::vector<std::vector<std::size_t>>& machines, std::size_t used,
                 Schedule* witness) {
    if (job == instance.jobs.size())
        return orders_feasible(instance, machines, 0, witness);
    const std::size_t limit = std::min(used + 1, machines.size());
    for (std::size_t k = 0; k < limit; ++k) {
        machines[k].push_back(job);
        if (assign_jobs(instance, job + 1, machines, std::max(used, k + 1), witness))
            return true;
        machines[k].pop_back();
    }
    return false;
}

std::optional<Schedule> search(const Instance& instance, std::size_t cap, bool want_witness) {
    if (instance.jobs.size() > cap)
        throw CapError("brute-force oracle cap exceeded: " +
                       std::to_string(instance.jobs.size()) + " jobs > cap " +
                       std::to_string(cap));
    if (instance.machines < 1) return std::nullopt;

    Schedule witness;
    // More machines than jobs never help; keeps recursion depth at n.
    std::vector<std::vector<std::size_t>> machines(
        std::min(static_cast<std::size_t>(instance.machines), instance.jobs.size()));
    if (assign_jobs(instance, 0, machines, 0, want_witness ? &witness : nullptr))
        return witness;
    return std::nullopt;
}

}  // namespace

bool brute_force_decide(const Instance& instance, std::size_t cap) {
    return search(instance, cap, false).has_value();
}

std::optional<Schedule> brute_force_schedule(const Instance& instance, std::size_t cap) {
    return search(instance, cap, true);
}

namespace {

bool pack(const BinPackingInstance& bp, std::size_t item, std::vector<std::int64_t>& loads,
          BinPartition& bins, std::size_t used) {
    if (item == bp.items.size()) return true;
    const std::size_t limit = std::min(used + 1, loads.size());
    for (std::size_t k = 0; k < limit; ++k) {
        if (loads[k] + bp.items[item] > bp.volume) continue;
        loads[k] += bp.items[item];
        bins[k].push_back(item);
        if (pack(bp, item + 1, loads, bins, std::max(used, k + 1))) return true;
        bins[k].pop_back();
        loads[k] -= bp.items[item];
    }
    return false;
}

}  // namespace

std::optional<BinPartition> bin_packing_decide(const BinPackingInstance& bp, std::size_t cap) {
    const std::size_t n = bp.items.size();
    if (n > cap)
        throw CapError("bin-packing oracle cap exceeded: " + std::to_string(n) +
                       " items > cap " + std::to_string(cap));
    if (bp.bins < 1 || static_cast<std::size_t>(bp.bins) > n)
        throw std::invalid_argument("bin packing requires 1 <= bins <= items");
    if (bp.volume < 1) throw std::invalid_argument("bin volume must be >= 1");
    for (const std::int64_t a : bp.items)
        if (a < 1) throw std::invalid_argument("bin packing items must be >= 1");

    std::vector<std::int64_t> loads(static_cast<std::size_t>(bp.bins), 0);
    BinPartition bins(static_cast<std::size_t>(bp.bins));
    if (pack(bp, 0, loads, bins, 0)) return bins;
    return std::nullopt;
}

}  // namespace ics
