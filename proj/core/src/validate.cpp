#include "icsched/validate.hpp"

#include <unordered_set>

namespace ics {

namespace {

std::string job_prefix(const Job& j) {
    return "job " + std::to_string(j.id) + ": ";
}

}  // namespace

ValidationReport validate(const Instance& instance) {
    ValidationReport report;
    auto add = [&](Violation::Kind kind, JobId job, std::string msg) {
        report.violations.push_back({kind, job, std::move(msg)});
    };

    if (instance.machines < 1)
        add(Violation::Kind::MachinesBelowOne, -1, "machines < 1");

    std::unordered_set<JobId> seen;
    seen.reserve(instance.jobs.size());
    for (const Job& j : instance.jobs) {
        if (!seen.insert(j.id).second)
            add(Violation::Kind::DuplicateId, j.id, job_prefix(j) + "duplicate id");
        if (j.id < 0)
            add(Violation::Kind::NegativeId, j.id, job_prefix(j) + "negative id");
        if (j.release < 0)
            add(Violation::Kind::NegativeRelease, j.id, job_prefix(j) + "negative release time");
        if (j.deadline >= kMaxTime || j.release >= kMaxTime || j.processing >= kMaxTime) {
            add(Violation::Kind::TimeTooLarge, j.id, job_prefix(j) + "time beyond 2^62");
            continue;  // derived checks below could overflow
        }
        if (j.deadline <= j.release)
            add(Violation::Kind::NonPositiveWindow, j.id, job_prefix(j) + "deadline <= release");
        if (j.processing < 1)
            add(Violation::Kind::ProcessingBelowOne, j.id, job_prefix(j) + "processing < 1");
        else if (j.deadline > j.release && j.processing > j.window_length())
            add(Violation::Kind::WindowTooShort, j.id, job_prefix(j) + "window too short");
    }
    return report;
}

}  // namespace ics
