#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "icsched/types.hpp"

namespace ics {

/// Solver knobs. `budget` caps the projected table size
/// (t_max+1) * 2^h * (2*ell+1)^m of each gap-separated part; a part that
/// projects above the ceiling raises BudgetError before any memory is
/// committed. Values above 2^62 are clamped (state keys are packed into
/// 64-bit words). `witness` additionally records, per table entry, which
/// rule produced it, enabling schedule extraction at roughly twice the
/// memory per entry.
struct SolveOptions {
    std::int64_t budget = std::int64_t{1} << 40;
    bool witness = false;
};

enum class Outcome { Feasible, Infeasible };

struct PartStats {
    Time t_max = 0;  // after shifting the part to start at time 0
    Time ell = 0;
    std::int64_t height = 0;
    int machines_used = 0;  // machine count after clamping to the part's job count
    std::uint64_t memo_entries = 0;
    bool within_state_bound = true;  // memo_entries <= (t_max+1)*2^h*(2ell+1)^m
};

struct SolveStats {
    bool dp_invoked = false;
    bool precheck_rejected = false;  // set by the bounds drivers
    std::uint64_t memo_entries = 0;  // summed over parts
    std::vector<PartStats> parts;
};

struct SolveReport {
    Outcome outcome = Outcome::Infeasible;
    std::optional<Schedule> schedule;  // present iff feasible and witness requested
    SolveStats stats;
};

/// One table coordinate: a time, a subset of the jobs live at that time, and
/// one idle offset per machine. The table value is 1 iff the subset plus
/// every job due by `t` can be scheduled so that machine i does no work at or
/// after t + idle_offsets[i].
struct DpState {
    Time t = 0;
    std::vector<JobId> live_jobs;    // subset of the jobs live at t
    std::vector<Time> idle_offsets;  // one per machine, each in [-ell, ell]
};

/// Memoized dynamic-programming table over (time, live subset, idle-offset
/// vector) states for one instance, evaluated top-down so that only
/// reachable states materialize.
///
/// Value recurrence, with S_t the jobs live at t and dues(t) the jobs whose
/// deadline is exactly t:
///  - base: T[0, {}, b] = 1;
///  - if t >= 1 and no job of S was released at t:
///        T[t, S, b] = T[t-1, S + dues(t), min(b+1, ell) componentwise];
///  - otherwise T[t, S, b] = 1 iff some job j in S fits on some machine i
///    with a finish time t + c, 0 < c <= b_i, inside j's window, such that
///    T[t, S - {j}, b with b_i := c - p_j] = 1. Enumerating every admissible
///    finish offset c subsumes chains of single-step reductions of b_i (the
///    table value is monotone in b), so no per-unit states are created.
///
/// Runs of the shift case are likewise taken in one jump to the next time at
/// which a released job enters the carried set; the skipped states all share
/// one value and are never materialized.
///
/// The final answer reads T[t_max, S_{t_max}, (ell,...,ell)].
///
/// A table owns mutable memo state: one table per thread. Distinct tables
/// may run concurrently.
class DpTable {
  public:
    /// Validates the instance shape and projects the table size against
    /// options.budget; throws std::invalid_argument or BudgetError.
    explicit DpTable(const Instance& instance, const SolveOptions& options = {});
    DpTable(DpTable&&) noexcept;
    DpTable& operator=(DpTable&&) noexcept;
    ~DpTable();

    /// Memoized table value of a well-formed state (live_jobs must be live
    /// at state.t; offsets within [-ell, ell], one per machine).
    int entry(const DpState& state);

    /// Evaluates the final-answer state T[t_max, S_{t_max}, (ell,...,ell)].
    Outcome decide_root();

    /// Witness for the root evaluation; requires options.witness and a
    /// prior feasible decide_root().
    std::optional<Schedule> extract_schedule();

    DpState root_state() const;
    std::vector<JobId> live_jobs_at(Time t) const;

    std::uint64_t memo_entries() const;
    bool within_state_bound() const;
    Time t_max() const;
    Time ell() const;
    std::int64_t height() const;
    int machines() const;

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Exact feasibility. Splits the instance at live-window gaps, shifts each
/// part to start at time 0, clamps machines to the part's job count, and
/// evaluates one DpTable per part. Jobs whose window is shorter than their
/// processing time make the answer Infeasible without any table being built.
/// Throws std::invalid_argument on structurally invalid instances and
/// BudgetError when a part projects above options.budget.
SolveReport decide(const Instance& instance, const SolveOptions& options = {});

/// decide() in witness mode; returns the schedule iff feasible. The returned
/// schedule always passes verify_schedule.
std::optional<Schedule> solve_with_witness(const Instance& instance,
                                           SolveOptions options = {});

}  // namespace ics
