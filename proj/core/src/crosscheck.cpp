#include "icsched/crosscheck.hpp"

#include <random>

#include "icsched/analysis.hpp"
#include "icsched/bounds.hpp"
#include "icsched/dp_solver.hpp"
#include "icsched/generator.hpp"
#include "icsched/oracle.hpp"
#include "icsched/verify.hpp"

namespace ics {

namespace {

std::uint64_t instance_seed(std::uint64_t suite_seed, std::int64_t index) {
    // splitmix64 step keeps per-instance streams independent
    std::uint64_t x = suite_seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(index) + 1);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

void require_caps(const CrosscheckParams& params) {
    if (params.count < 0) throw std::invalid_argument("count must be >= 0");
    if (params.n_max < 0 || static_cast<std::size_t>(params.n_max) > kOracleJobCap)
        throw std::invalid_argument("n_max exceeds the brute-force oracle cap of " +
                                    std::to_string(kOracleJobCap));
    if (params.m_max < 1) throw std::invalid_argument("m_max must be >= 1");
    if (params.t_max < 1) throw std::invalid_argument("t_max must be >= 1");
}

}  // namespace

Instance crosscheck_instance(const CrosscheckParams& params, std::int64_t index) {
    const std::uint64_t seed = instance_seed(params.seed, index);
    std::mt19937_64 rng(seed);

    const std::int64_t n =
        params.n_max == 0 ? 0 : static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(params.n_max)) + 1;
    const int m = static_cast<int>(rng() % static_cast<std::uint64_t>(params.m_max)) + 1;

    GeneratorStyle style;
    switch (index % 4) {
        case 0: style = GeneratorStyle::unconstrained(); break;
        case 1: style = GeneratorStyle::target_slack(static_cast<Time>(rng() % 3)); break;
        case 2: style = GeneratorStyle::target_looseness(Rational(3, 2)); break;
        default: style = GeneratorStyle::target_looseness(Rational(1));  // rigid jobs
    }
    return random_instance(rng(), n, m, style, params.t_max);
}

CrosscheckResult run_crosscheck(const CrosscheckParams& params) {
    require_caps(params);
    CrosscheckResult result;
    SolveOptions options;
    options.budget = params.budget;

    for (std::int64_t i = 0; i < params.count; ++i) {
        const Instance instance = crosscheck_instance(params, i);
        ++result.instances_run;

        const SolveReport plain = decide(instance, options);
        const SolveReport by_looseness = solve_bounded_looseness(instance, options);
        const SolveReport by_slack = solve_bounded_slack(instance, options);
        const bool oracle = brute_force_decide(instance);

        const bool dp_feasible = plain.outcome == Outcome::Feasible;
        if (dp_feasible != oracle) {
            result.mismatches.push_back(
                {i, instance, dp_feasible ? "DP feasible, oracle infeasible"
                                          : "DP infeasible, oracle feasible"});
            continue;
        }
        if (by_looseness.outcome != plain.outcome)
            result.mismatches.push_back({i, instance, "looseness driver disagrees with decide"});
        if (by_slack.outcome != plain.outcome)
            result.mismatches.push_back({i, instance, "slack driver disagrees with decide"});

        if (oracle) {
            ++result.feasible;
            // Feasible instances must respect both height bounds, so the
            // prechecks can never reject them.
            const InstanceProfile p = profile(instance);
            if (p.n > 0) {
                const auto slack_cap = slack_height_bound(instance.machines, p.slack);
                const auto loose_cap =
                    looseness_height_bound(instance.machines, std::max<Time>(p.ell, 1), p.looseness);
                if (p.height > slack_cap.value)
                    result.bound_violations.push_back(
                        {i, instance, "feasible height above the slack bound"});
                if (p.height > loose_cap.value)
                    result.bound_violations.push_back(
                        {i, instance, "feasible height above the looseness bound"});
            }
            if (by_looseness.stats.precheck_rejected || by_slack.stats.precheck_rejected)
                result.bound_violations.push_back({i, instance, "precheck rejected a feasible instance"});
        }

        for (const PartStats& part : plain.stats.parts)
            if (!part.within_state_bound)
                result.state_violations.push_back({i, instance, "memoized states above the table bound"});

        if (params.check_witnesses) {
            const auto witness = solve_with_witness(instance, options);
            if (witness.has_value() != dp_feasible)
                result.witness_violations.push_back(
                    {i, instance, "witness presence disagrees with feasibility"});
            else if (witness && !verify_schedule(instance, *witness))
                result.witness_violations.push_back({i, instance, "witness fails verification"});
        }
    }
    return result;
}

MetamorphicResult run_metamorphic(const CrosscheckParams& params) {
    MetamorphicResult result;
    SolveOptions options;
    options.budget = params.budget;

    for (std::int64_t i = 0; i < params.count; ++i) {
        Instance instance = crosscheck_instance(params, i);
        std::mt19937_64 rng(instance_seed(params.seed ^ 0xabcdef, i));

        // A third of the suite gets a far-away job suffix so gap splitting
        // has something to do.
        if (i % 3 == 0 && !instance.jobs.empty()) {
            const std::size_t cut = instance.jobs.size() / 2;
            for (std::size_t k = cut; k < instance.jobs.size(); ++k) {
                instance.jobs[k].release += 4 * params.t_max;
                instance.jobs[k].deadline += 4 * params.t_max;
            }
        }
        ++result.instances_run;
        const Outcome base = decide(instance, options).outcome;

        // shift invariance
        const Time delta = static_cast<Time>(rng() % 40);
        Instance shifted = instance;
        for (Job& j : shifted.jobs) {
            j.release += delta;
            j.deadline += delta;
        }
        if (decide(shifted, options).outcome != base)
            result.violations.push_back({i, instance, "decide changed under time shift"});

        // machine monotonicity
        Instance wider = instance;
        wider.machines += 1;
        const Outcome wider_outcome = decide(wider, options).outcome;
        if (base == Outcome::Feasible && wider_outcome != Outcome::Feasible)
            result.violations.push_back({i, instance, "feasible at m but not at m+1"});

        // gap-split conjunction
        bool all_parts = true;
        for (const Instance& part : split_at_gaps(instance))
            all_parts = all_parts && decide(part, options).outcome == Outcome::Feasible;
        if (instance.jobs.empty()) all_parts = true;
        if ((base == Outcome::Feasible) != all_parts)
            result.violations.push_back({i, instance, "gap-split conjunction disagrees"});
    }
    return result;
}

}  // namespace ics
