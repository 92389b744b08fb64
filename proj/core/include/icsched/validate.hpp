#pragma once

#include <string>
#include <vector>

#include "icsched/types.hpp"

namespace ics {

struct Violation {
    enum class Kind {
        MachinesBelowOne,
        DuplicateId,
        NegativeId,
        NegativeRelease,
        NonPositiveWindow,   // deadline <= release
        ProcessingBelowOne,
        WindowTooShort,      // processing > deadline - release
        TimeTooLarge,        // beyond kMaxTime
    };

    Kind kind;
    JobId job;  // -1 when the violation is instance-level
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }

    /// True when every violation is WindowTooShort: the instance is
    /// structurally sound but trivially infeasible.
    bool only_window_too_short() const {
        if (violations.empty()) return false;
        for (const auto& v : violations)
            if (v.kind != Violation::Kind::WindowTooShort) return false;
        return true;
    }

    bool has_window_too_short() const {
        for (const auto& v : violations)
            if (v.kind == Violation::Kind::WindowTooShort) return true;
        return false;
    }

    std::vector<std::string> messages() const {
        std::vector<std::string> out;
        out.reserve(violations.size());
        for (const auto& v : violations) out.push_back(v.message);
        return out;
    }
};

/// Reports every rule violated by the instance; an empty report means valid.
/// WindowTooShort jobs make the instance structurally acceptable but
/// infeasible for any machine count.
ValidationReport validate(const Instance& instance);

}  // namespace ics
