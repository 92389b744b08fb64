#pragma once

#include <cstdint>
#include <optional>

#include "icsched/dp_solver.hpp"
#include "icsched/rational.hpp"
#include "icsched/types.hpp"

namespace ics {

/// An upper bound on the height of any feasible instance with the given
/// parameters. Instances whose height exceeds it are infeasible.
struct HeightBound {
    enum class Source { Looseness, Slack, Degenerate };
    std::int64_t value = 0;
    Source source = Source::Slack;
};

/// Height bound for feasible instances of looseness lambda and window
/// lengths up to ell on m machines:
///
///     2m * (ln(ell) / (ln(lambda) - ln(lambda - 1)) + 1)
///
/// evaluated in doubles, floored after a relative safety margin so exact
/// integer values survive rounding noise. For lambda = 1 the formula
/// degenerates and the bound is m: every job then occupies its whole window,
/// so more than m overlapping windows cannot all be served.
/// Throws std::invalid_argument for lambda < 1, ell < 1, or m < 1.
HeightBound looseness_height_bound(int machines, Time ell, const Rational& looseness);

/// Height bound (2*sigma + 1) * m for feasible instances of slack sigma on
/// m machines, in exact integer arithmetic (saturating at INT64_MAX).
HeightBound slack_height_bound(int machines, Time sigma);

enum class PrecheckMode { Looseness, Slack, Both };

struct PrecheckResult {
    bool pass = true;
    std::int64_t height = 0;
    std::int64_t bound = 0;  // the binding bound (minimum of those consulted)
    PrecheckMode mode = PrecheckMode::Both;
};

/// Computes the instance height and the selected height bound(s) from the
/// instance's own looseness/slack; rejects iff the height exceeds a bound.
/// Rejection is sound: rejected instances are infeasible.
PrecheckResult precheck(const Instance& instance, PrecheckMode mode);

/// Theorem-style drivers: run the selected precheck and only invoke the DP
/// when it passes. Always equal to decide() on valid instances.
SolveReport solve_bounded_looseness(const Instance& instance, const SolveOptions& = {});
SolveReport solve_bounded_slack(const Instance& instance, const SolveOptions& = {});

/// Sound lower bound on the number of machines needed: the maximum of
///  - ceil(h / (2*sigma + 1))          (inverting the slack height bound),
///  - the least m whose looseness height bound reaches h,
///  - ceil(total work / horizon)       (load argument),
/// and 1.
std::int64_t min_machines_lower_bound(const Instance& instance);

/// Smallest machine count in [lower bound, m_max] for which the instance is
/// feasible, scanning upward (feasibility is monotone in m); nullopt when
/// m_max machines are still not enough. The instance's own machine count is
/// ignored.
std::optional<std::int64_t> min_machines(const Instance& instance, std::int64_t m_max,
                                         const SolveOptions& = {});

}  // namespace ics
