#pragma once

#include <vector>

#include "icsched/rational.hpp"
#include "icsched/types.hpp"

namespace ics {

/// Structural quantities of an instance.
///
/// looseness = max_j (d_j - t_j) / p_j     (exact rational)
/// slack     = max_j (d_j - t_j) - p_j
/// height    = max_t |{j : t in [t_j, d_j)}|
struct InstanceProfile {
    std::int64_t n = 0;
    Time ell = 0;     // max window length
    Time t_max = 0;   // max release time
    Rational looseness{1, 1};
    Time slack = 0;
    std::int64_t height = 0;
    // Set when some job has processing > window length; such an instance is
    // infeasible for any machine count, and looseness may drop below 1.
    bool window_too_short = false;
};

/// Computes the profile with an event sweep in O(n log n). Requires a valid
/// instance shape (positive processing, deadline > release); tolerates
/// WindowTooShort jobs and flags them.
InstanceProfile profile(const Instance& instance);

/// Jobs whose half-open window [t_j, d_j) contains `t`, sorted by id.
std::vector<JobId> jobs_live_at(const Instance& instance, Time t);

/// Jobs with deadline <= t, sorted by id.
std::vector<JobId> jobs_due_by(const Instance& instance, Time t);

/// Partitions the jobs into maximal groups separated by integer times at
/// which no window is live. Each part keeps the original machine count and
/// preserves the original job order; parts are emitted in time order.
/// The instance is feasible iff every part is feasible.
std::vector<Instance> split_at_gaps(const Instance& instance);

}  // namespace ics
