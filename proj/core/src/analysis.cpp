#include "icsched/analysis.hpp"

#include <algorithm>
#include <cassert>

namespace ics {

InstanceProfile profile(const Instance& instance) {
    InstanceProfile p;
    p.n = static_cast<std::int64_t>(instance.jobs.size());
    if (p.n == 0) return p;

    // ell, t_max, looseness, slack are direct maxima over jobs.
    bool first = true;
    for (const Job& j : instance.jobs) {
        const Time window = j.window_length();
        p.ell = std::max(p.ell, window);
        p.t_max = std::max(p.t_max, j.release);
        p.slack = first ? window - j.processing : std::max(p.slack, window - j.processing);
        const Rational ratio(window, j.processing);
        if (first || ratio > p.looseness) p.looseness = ratio;
        if (j.processing > window) p.window_too_short = true;
        first = false;
    }

    // Height by event sweep: +1 at releases, -1 at deadlines. Windows are
    // half-open, so at equal times the -1 events come first.
    std::vector<std::pair<Time, int>> events;
    events.reserve(2 * instance.jobs.size());
    for (const Job& j : instance.jobs) {
        events.emplace_back(j.release, +1);
        events.emplace_back(j.deadline, -1);
    }
    std::sort(events.begin(), events.end());
    std::int64_t running = 0;
    for (const auto& [t, delta] : events) {
        running += delta;
        p.height = std::max(p.height, running);
    }
    assert(running == 0);
    return p;
}

std::vector<JobId> jobs_live_at(const Instance& instance, Time t) {
    std::vector<JobId> out;
    for (const Job& j : instance.jobs)
        if (j.release <= t && t < j.deadline) out.push_back(j.id);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<JobId> jobs_due_by(const Instance& instance, Time t) {
    std::vector<JobId> out;
    for (const Job& j : instance.jobs)
        if (j.deadline <= t) out.push_back(j.id);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Instance> split_at_gaps(const Instance& instance) {
    std::vector<Instance> parts;
    if (instance.jobs.empty()) return parts;

    std::vector<std::size_t> order(instance.jobs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return instance.jobs[a].release < instance.jobs[b].release;
    });

    // A new group starts when the next release lies strictly beyond every
    // deadline seen so far: then some integer time has no live window.
    std::vector<int> group(instance.jobs.size(), 0);
    int current = 0;
    Time max_deadline = instance.jobs[order[0]].deadline;
    group[order[0]] = 0;
    for (std::size_t k = 1; k < order.size(); ++k) {
        const Job& j = instance.jobs[order[k]];
        if (j.release > max_deadline) ++current;
        group[order[k]] = current;
        max_deadline = std::max(max_deadline, j.deadline);
    }

    parts.resize(static_cast<std::size_t>(current) + 1);
    for (auto& part : parts) part.machines = instance.machines;
    for (std::size_t i = 0; i < instance.jobs.size(); ++i)
        parts[static_cast<std::size_t>(group[i])].jobs.push_back(instance.jobs[i]);
    return parts;
}

}  // namespace ics
