#include <random>

#include "doctest.h"

#include "icsched/analysis.hpp"
#include "icsched/dp_solver.hpp"
#include "icsched/errors.hpp"
#include "icsched/generator.hpp"
#include "icsched/oracle.hpp"
#include "icsched/verify.hpp"
#include "literal_dp.hpp"
#include "test_helpers.hpp"

using namespace ics;
using ics::testing::LiteralDp;
using ics::testing::make_instance;

namespace {
const Instance kTight = make_instance(1, {{0, 2, 2}});           // one exact-fit job
const Instance kRigidPair = make_instance(1, {{0, 3, 2}, {1, 3, 2}});
}  // namespace

TEST_CASE("table entries of the exact-fit job") {
    // ell = 2; the only placement finishes at the deadline.
    DpTable table(kTight);
    CHECK(table.entry({0, {0}, {2}}) == 1);
    CHECK(table.entry({0, {0}, {1}}) == 0);
    CHECK(table.entry({0, {0}, {0}}) == 0);
    CHECK(table.entry({0, {0}, {-2}}) == 0);
}

TEST_CASE("base row is 1 for every offset") {
    DpTable table(kTight);
    for (Time b = -2; b <= 2; ++b) CHECK(table.entry({0, {}, {b}}) == 1);
}

TEST_CASE("root state reads the final answer rule") {
    DpTable table(kTight);
    const DpState root = table.root_state();
    CHECK(root.t == 0);
    CHECK(root.live_jobs == std::vector<JobId>{0});
    CHECK(root.idle_offsets == std::vector<Time>{2});
    CHECK(table.decide_root() == Outcome::Feasible);
}

TEST_CASE("malformed states are rejected") {
    DpTable table(kTight);
    CHECK_THROWS_AS(table.entry({0, {0}, {}}), std::invalid_argument);       // wrong arity
    CHECK_THROWS_AS(table.entry({0, {0}, {3}}), std::invalid_argument);      // offset > ell
    CHECK_THROWS_AS(table.entry({0, {1}, {2}}), std::invalid_argument);      // unknown job
    CHECK_THROWS_AS(table.entry({2, {0}, {2}}), std::invalid_argument);      // not live at 2
}

TEST_CASE("decide matches the documented small cases") {
    CHECK(decide(kTight).outcome == Outcome::Feasible);
    CHECK(decide(kRigidPair).outcome == Outcome::Infeasible);
    Instance pair2 = kRigidPair;
    pair2.machines = 2;
    CHECK(decide(pair2).outcome == Outcome::Feasible);
}

TEST_CASE("witness extraction returns the only feasible start") {
    const auto schedule = solve_with_witness(kTight);
    REQUIRE(schedule.has_value());
    REQUIRE(schedule->placements.size() == 1);
    CHECK(schedule->placements[0].job == 0);
    CHECK(schedule->placements[0].machine == 1);
    CHECK(schedule->placements[0].start == 0);
}

TEST_CASE("witness on two machines is valid and machine-disjoint") {
    Instance pair2 = kRigidPair;
    pair2.machines = 2;
    const auto schedule = solve_with_witness(pair2);
    REQUIRE(schedule.has_value());
    CHECK(verify_schedule(pair2, *schedule));
    REQUIRE(schedule->placements.size() == 2);
    CHECK(schedule->placements[0].machine != schedule->placements[1].machine);
    CHECK_FALSE(solve_with_witness(kRigidPair).has_value());
}

TEST_CASE("window-too-short jobs short-circuit to infeasible") {
    const Instance i = make_instance(1, {{0, 2, 3}});
    const SolveReport report = decide(i);
    CHECK(report.outcome == Outcome::Infeasible);
    CHECK_FALSE(report.stats.dp_invoked);
}

TEST_CASE("structurally invalid instances throw") {
    Instance i;
    i.machines = 0;
    CHECK_THROWS_AS(decide(i), std::invalid_argument);
}

TEST_CASE("empty instance is feasible with an empty witness") {
    Instance i;
    i.machines = 2;
    SolveOptions options;
    options.witness = true;
    const SolveReport report = decide(i, options);
    CHECK(report.outcome == Outcome::Feasible);
    REQUIRE(report.schedule.has_value());
    CHECK(report.schedule->placements.empty());
    CHECK_FALSE(report.stats.dp_invoked);
}

TEST_CASE("more machines than jobs are allowed") {
    Instance i = kTight;
    i.machines = 7;
    CHECK(decide(i).outcome == Outcome::Feasible);
}

TEST_CASE("the state budget fails loudly") {
    const Instance i = make_instance(3, {{0, 40, 20}, {5, 45, 20}, {10, 50, 20},
                                         {0, 42, 21}, {3, 44, 19}});
    SolveOptions options;
    options.budget = 100;
    CHECK_THROWS_WITH_AS(decide(i, options),
                         doctest::Contains("budget exceeded"), BudgetError);
}

TEST_CASE("solver agrees with the literal unit-step recurrence") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::tuple<Time, Time, Time>> jobs;
        const int n = static_cast<int>(rng() % 4);  // up to 3 jobs
        for (int k = 0; k < n; ++k) {
            const Time release = static_cast<Time>(rng() % 5);
            const Time processing = 1 + static_cast<Time>(rng() % 3);
            const Time deadline = release + processing + static_cast<Time>(rng() % 3);
            jobs.emplace_back(release, deadline, processing);
        }
        const Instance i = make_instance(1 + static_cast<int>(rng() % 2), jobs);

        LiteralDp literal(i);
        CAPTURE(trial);
        CHECK((decide(i).outcome == Outcome::Feasible) == literal.decide());
    }
}

TEST_CASE("table entries match the literal recurrence state by state") {
    // every reachable-looking state of the pair instance on one machine
    const Instance i = kRigidPair;  // ell = 3
    DpTable table(i);
    LiteralDp literal(i);
    const std::vector<std::vector<JobId>> subsets_t1{{}, {0}, {1}, {0, 1}};
    for (const auto& subset : subsets_t1)
        for (Time b = -3; b <= 3; ++b) {
            const std::set<JobId> ids(subset.begin(), subset.end());
            CAPTURE(subset.size());
            CAPTURE(b);
            CHECK(table.entry({1, subset, {b}}) == literal.entry(1, ids, {b}));
        }
    for (Time b = -3; b <= 3; ++b) {
        CHECK(table.entry({0, {0}, {b}}) == literal.entry(0, {0}, {b}));
        CHECK(table.entry({0, {}, {b}}) == literal.entry(0, {}, {b}));
    }
}

TEST_CASE("randomized agreement with the brute-force oracle") {
    for (std::uint64_t seed = 500; seed < 650; ++seed) {
        const std::uint64_t style = seed % 3;
        const Instance i = random_instance(
            seed, 1 + static_cast<std::int64_t>(seed % 6), 1 + static_cast<int>(seed % 3),
            style == 0   ? GeneratorStyle::unconstrained()
            : style == 1 ? GeneratorStyle::target_slack(2)
                         : GeneratorStyle::target_looseness(Rational(3, 2)),
            12);
        const SolveReport report = decide(i);
        CAPTURE(seed);
        CHECK((report.outcome == Outcome::Feasible) == brute_force_decide(i));
        for (const PartStats& part : report.stats.parts) CHECK(part.within_state_bound);
    }
}

TEST_CASE("decide is consistent across gaps and shifts") {
    for (std::uint64_t seed = 40; seed < 80; ++seed) {
        Instance i = random_instance(seed, 5, 2, GeneratorStyle::target_slack(1), 8);
        for (std::size_t k = i.jobs.size() / 2; k < i.jobs.size(); ++k) {
            i.jobs[k].release += 50;
            i.jobs[k].deadline += 50;
        }
        const Outcome base = decide(i).outcome;

        bool parts_feasible = true;
        for (const Instance& part : split_at_gaps(i))
            parts_feasible = parts_feasible && decide(part).outcome == Outcome::Feasible;
        CHECK((base == Outcome::Feasible) == parts_feasible);

        Instance shifted = i;
        for (Job& j : shifted.jobs) {
            j.release += 1000;
            j.deadline += 1000;
        }
        CHECK(decide(shifted).outcome == base);
    }
}

TEST_CASE("feasibility is monotone in the machine count") {
    for (std::uint64_t seed = 100; seed < 140; ++seed) {
        const Instance i = random_instance(seed, 5, 1 + static_cast<int>(seed % 2),
                                           GeneratorStyle::target_looseness(Rational(1)), 9);
        if (decide(i).outcome == Outcome::Feasible) {
            Instance wider = i;
            wider.machines += 1;
            CHECK(decide(wider).outcome == Outcome::Feasible);
        }
    }
}

TEST_CASE("memo entries stay within the per-part table bound") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const Instance i =
            random_instance(seed, 6, 3, GeneratorStyle::unconstrained(), 12);
        const SolveReport report = decide(i);
        for (const PartStats& part : report.stats.parts) {
            CAPTURE(seed);
            CHECK(part.within_state_bound);
            CHECK(part.memo_entries > 0);
        }
    }
}

TEST_CASE("witness mode and decide mode agree") {
    for (std::uint64_t seed = 300; seed < 360; ++seed) {
        const Instance i = random_instance(seed, 5, 2, GeneratorStyle::target_slack(3), 10);
        const bool feasible = decide(i).outcome == Outcome::Feasible;
        const auto witness = solve_with_witness(i);
        CAPTURE(seed);
        CHECK(witness.has_value() == feasible);
        if (witness) CHECK(verify_schedule(i, *witness));
    }
}
