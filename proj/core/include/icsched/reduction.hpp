#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "icsched/bin_packing.hpp"
#include "icsched/rational.hpp"
#include "icsched/types.hpp"

namespace ics {

/// Result of reducing a bin-packing instance to a scheduling instance.
///
/// For n items and m bins, the non-trivial branch emits m*n jobs: item i
/// contributes a group of m jobs released at (i-1)*B, all of which must be
/// finished by i*B + A (by n*B + V for the last group), where A is the item
/// sum and B = (m*n)^c * A. One job of the group carries the item (processing
/// B + a_i), the others processing B. Scheduling the carrier job of item i
/// on machine k encodes putting item i into bin k.
///
/// When V > A everything fits into one bin and a fixed trivially feasible
/// instance (one unit job, same machine count) is returned with trivial=true.
struct ReductionOutput {
    Instance instance;
    std::int64_t a_sum = 0;                       // A
    std::int64_t big_b = 0;                       // B = (m*n)^c * A
    bool trivial = false;
    std::map<std::pair<int, int>, JobId> job_map; // (item i, copy k), 1-based -> job id
};

/// Builds the reduction. Requires n >= 2 items and 1 <= bins <= items;
/// throws std::invalid_argument otherwise and std::overflow_error when
/// (m*n)^c * A leaves 62-bit range.
ReductionOutput reduce_bin_packing(const BinPackingInstance& bp, int c = 1);

/// Structural checks of a non-trivial reduction output against its source.
struct ReductionProperties {
    bool vacuous = false;        // trivial branch: nothing to check
    bool job_count_ok = false;   // exactly m*n jobs
    bool looseness_ok = false;   // looseness <= 1 + (m*n)^-c, exact
    bool height_ok = false;      // height <= 2m
    bool agreeable_ok = false;   // deadlines ordered like release times
    std::int64_t job_count = 0;
    Rational looseness{1, 1};
    Rational looseness_cap{1, 1};
    std::int64_t height = 0;
    std::int64_t height_cap = 0;

    bool all_ok() const {
        return vacuous || (job_count_ok && looseness_ok && height_ok && agreeable_ok);
    }
};

ReductionProperties verify_reduction(const BinPackingInstance& bp,
                                     const ReductionOutput& out, int c);

/// Translates a bin-packing witness partition into a schedule of the reduced
/// instance: the carrier job of item i in bin k runs on machine k in
/// [(i-1)B + sum of earlier bin-k items, iB + that sum + a_i), and the other
/// group jobs fill the remaining machines with the analogous B-length slots.
Schedule schedule_from_partition(const BinPackingInstance& bp, const ReductionOutput& out,
                                 const BinPartition& partition);

}  // namespace ics
