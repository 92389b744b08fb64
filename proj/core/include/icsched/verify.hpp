#pragma once

#include <string>
#include <vector>

#include "icsched/types.hpp"

namespace ics {

/// Checks a schedule against the instance:
///  - every job placed exactly once, no foreign job ids,
///  - machine index within 1..m,
///  - start >= release and start + processing <= deadline,
///  - per machine, execution intervals pairwise disjoint.
/// When `reasons` is non-null, a human-readable line is appended per failure.
bool verify_schedule(const Instance& instance, const Schedule& schedule,
                     std::vector<std::string>* reasons = nullptr);

}  // namespace ics
