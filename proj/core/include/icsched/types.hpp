#pragma once

#include <cstdint>
#include <vector>

namespace ics {

using Time = std::int64_t;
using JobId = std::int64_t;

// Largest admissible deadline; keeps every derived quantity (window lengths,
// idle offsets, load sums) inside 64-bit signed arithmetic.
inline constexpr Time kMaxTime = Time{1} << 62;

/// One job: may execute non-preemptively for `processing` time units inside
/// the half-open window [release, deadline).
struct Job {
    JobId id = 0;
    Time release = 0;
    Time deadline = 0;
    Time processing = 0;

    Time window_length() const { return deadline - release; }

    friend bool operator==(const Job&, const Job&) = default;
};

/// A set of jobs to be scheduled on `machines` identical machines.
struct Instance {
    std::vector<Job> jobs;
    int machines = 1;

    friend bool operator==(const Instance&, const Instance&) = default;
};

/// One job's placement in a schedule. Machines are numbered 1..m.
struct Placement {
    JobId job = 0;
    int machine = 1;
    Time start = 0;

    friend bool operator==(const Placement&, const Placement&) = default;
};

/// A feasibility witness: one placement per job of the instance.
struct Schedule {
    std::vector<Placement> placements;

    const Placement* find(JobId job) const {
        for (const auto& p : placements)
            if (p.job == job) return &p;
        return nullptr;
    }

    friend bool operator==(const Schedule&, const Schedule&) = default;
};

}  // namespace ics
