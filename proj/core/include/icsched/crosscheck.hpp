#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "icsched/types.hpp"

namespace ics {

/// Parameters of the randomized agreement suite. Instances are drawn with
/// mixed window styles (unconstrained, slack-capped, looseness-capped,
/// rigid) from `seed`; caps must stay within the brute-force oracle's range.
struct CrosscheckParams {
    std::uint64_t seed = 1;
    std::int64_t count = 100;
    std::int64_t n_max = 6;
    int m_max = 3;
    Time t_max = 12;
    std::int64_t budget = std::int64_t{1} << 40;
    bool check_witnesses = true;
};

struct CrosscheckFailure {
    std::int64_t index = 0;
    Instance instance;
    std::string what;
};

/// Per-suite aggregate. A clean run has every counter at zero.
struct CrosscheckResult {
    std::int64_t instances_run = 0;
    std::int64_t feasible = 0;
    std::vector<CrosscheckFailure> mismatches;        // solver vs oracle vs drivers
    std::vector<CrosscheckFailure> bound_violations;  // feasible with height above a bound
    std::vector<CrosscheckFailure> state_violations;  // memo entries above the table bound
    std::vector<CrosscheckFailure> witness_violations;

    bool clean() const {
        return mismatches.empty() && bound_violations.empty() && state_violations.empty() &&
               witness_violations.empty();
    }
};

/// Runs `count` seeded random instances through the DP, both bounded
/// drivers, and the brute-force oracle, recording every disagreement. Also
/// checks height-bound soundness on oracle-feasible instances, the memoized
/// state-count bound, and (optionally) witness validity.
/// Throws std::invalid_argument when caps exceed the oracle's limits.
CrosscheckResult run_crosscheck(const CrosscheckParams& params);

struct MetamorphicResult {
    std::int64_t instances_run = 0;
    std::vector<CrosscheckFailure> violations;
    bool clean() const { return violations.empty(); }
};

/// Metamorphic suite: decide() must be invariant under shifting all times,
/// monotone under adding a machine, and consistent with conjunction over
/// gap-split parts.
MetamorphicResult run_metamorphic(const CrosscheckParams& params);

/// The instance drawn for suite position `index` (exposed so failures can be
/// reproduced independently of the suite loop).
Instance crosscheck_instance(const CrosscheckParams& params, std::int64_t index);

}  // namespace ics
