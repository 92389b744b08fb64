#pragma once

#include <cstdint>
#include <optional>

#include "icsched/rational.hpp"
#include "icsched/types.hpp"

namespace ics {

/// How the window length of generated jobs relates to their processing time.
struct GeneratorStyle {
    enum class Kind { Unconstrained, TargetSlack, TargetLooseness };
    Kind kind = Kind::Unconstrained;
    Time sigma_max = 0;              // TargetSlack
    Rational lambda_max{1, 1};       // TargetLooseness

    static GeneratorStyle unconstrained() { return {}; }
    static GeneratorStyle target_slack(Time sigma) {
        return {Kind::TargetSlack, sigma, Rational{1, 1}};
    }
    static GeneratorStyle target_looseness(Rational lambda) {
        return {Kind::TargetLooseness, 0, lambda};
    }
};

/// Deterministic seeded instance generator. Per job: release uniform in
/// [0, horizon), processing uniform in [1, horizon], deadline
/// release + processing + delta with delta respecting the style. Every
/// emitted job fits its window. Draws use a fixed rejection sampler, so a
/// given (seed, parameters) pair produces identical instances on any
/// platform. Throws std::invalid_argument on impossible style constraints.
Instance random_instance(std::uint64_t seed, std::int64_t n, int machines,
                         const GeneratorStyle& style, Time horizon);

}  // namespace ics
