#include "icsched/verify.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace ics {

namespace {

void note(std::vector<std::string>* reasons, std::string msg) {
    if (reasons) reasons->push_back(std::move(msg));
}

}  // namespace

bool verify_schedule(const Instance& instance, const Schedule& schedule,
                     std::vector<std::string>* reasons) {
    bool ok = true;

    std::unordered_map<JobId, const Job*> jobs;
    jobs.reserve(instance.jobs.size());
    for (const Job& j : instance.jobs) jobs[j.id] = &j;

    std::unordered_map<JobId, int> placed;
    for (const Placement& p : schedule.placements) ++placed[p.job];

    for (const Job& j : instance.jobs) {
        const auto it = placed.find(j.id);
        if (it == placed.end()) {
            ok = false;
            note(reasons, "job " + std::to_string(j.id) + " is not scheduled");
        } else if (it->second > 1) {
            ok = false;
            note(reasons, "job " + std::to_string(j.id) + " is scheduled more than once");
        }
    }

    // intervals per machine, with window and bounds checks on the way
    std::map<int, std::vector<std::pair<Time, Time>>> by_machine;
    for (const Placement& p : schedule.placements) {
        const auto it = jobs.find(p.job);
        if (it == jobs.end()) {
            ok = false;
            note(reasons, "schedule names unknown job " + std::to_string(p.job));
            continue;
        }
        const Job& j = *it->second;
        if (p.machine < 1 || p.machine > instance.machines) {
            ok = false;
            note(reasons, "job " + std::to_string(p.job) + " on machine " +
                              std::to_string(p.machine) + " outside 1.." +
                              std::to_string(instance.machines));
        }
        // 128-bit finish: starts are caller-supplied and unconstrained.
        const auto finish = static_cast<__int128>(p.start) + j.processing;
        if (p.start < j.release || finish > j.deadline) {
            ok = false;
            note(reasons, "job " + std::to_string(p.job) + " runs outside its window");
            continue;  // interval known bad; finish may not even fit int64
        }
        by_machine[p.machine].emplace_back(p.start, static_cast<Time>(finish));
    }

    for (auto& [machine, intervals] : by_machine) {
        std::sort(intervals.begin(), intervals.end());
        for (std::size_t k = 1; k < intervals.size(); ++k) {
            if (intervals[k].first < intervals[k - 1].second) {
                ok = false;
                note(reasons, "machine " + std::to_string(machine) +
                                  " executes two jobs at once");
            }
        }
    }
    return ok;
}

}  // namespace ics
