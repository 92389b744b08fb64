#pragma once

#include <optional>

#include "icsched/bin_packing.hpp"
#include "icsched/types.hpp"

namespace ics {

// Exhaustive ground-truth deciders for small instances. Deliberately simple:
// these are the reference all solvers are checked against, so they must stay
// easy to audit. Hard caps prevent accidental factorial blowups.

inline constexpr std::size_t kOracleJobCap = 8;
inline constexpr std::size_t kOracleItemCap = 12;

/// Enumerates every machine assignment (with machine-symmetry pruning) and
/// every execution order per machine; each ordered sequence is placed
/// greedily at max(release, previous finish). Greedy placement is earliest-
/// finish-optimal for a fixed sequence, so the enumeration is exact.
/// Throws CapError when the instance has more than `cap` jobs.
bool brute_force_decide(const Instance& instance, std::size_t cap = kOracleJobCap);

/// Same enumeration, returning the first feasible witness found.
std::optional<Schedule> brute_force_schedule(const Instance& instance,
                                             std::size_t cap = kOracleJobCap);

/// Exhaustive m-way partition search with bin-symmetry pruning. Returns a
/// witness partition (bin sums verified <= volume) or nullopt.
/// Throws CapError beyond `cap` items, std::invalid_argument when the
/// instance violates 1 <= bins <= items or has an item < 1.
std::optional<BinPartition> bin_packing_decide(const BinPackingInstance& bp,
                                               std::size_t cap = kOracleItemCap);

}  // namespace ics
