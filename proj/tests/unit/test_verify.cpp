#include "doctest.h"

#include "icsched/verify.hpp"
#include "test_helpers.hpp"

using namespace ics;
using ics::testing::make_instance;

namespace {
const Instance kTight = make_instance(1, {{0, 2, 2}});
}

TEST_CASE("exact-fit placement verifies") {
    Schedule s;
    s.placements.push_back({0, 1, 0});
    CHECK(verify_schedule(kTight, s));
}

TEST_CASE("late start missing the deadline fails") {
    Schedule s;
    s.placements.push_back({0, 1, 1});  // finishes at 3 > deadline 2
    std::vector<std::string> reasons;
    CHECK_FALSE(verify_schedule(kTight, s, &reasons));
    REQUIRE_FALSE(reasons.empty());
    CHECK(reasons[0].find("window") != std::string::npos);
}

TEST_CASE("overlapping intervals on one machine fail") {
    const Instance i = make_instance(1, {{0, 4, 2}, {0, 4, 2}});
    Schedule s;
    s.placements.push_back({0, 1, 0});
    s.placements.push_back({1, 1, 1});
    CHECK_FALSE(verify_schedule(i, s));
}

TEST_CASE("the same intervals on two machines verify") {
    const Instance i = make_instance(2, {{0, 4, 2}, {0, 4, 2}});
    Schedule s;
    s.placements.push_back({0, 1, 0});
    s.placements.push_back({1, 2, 1});
    CHECK(verify_schedule(i, s));
}

TEST_CASE("missing and unknown jobs are reported") {
    const Instance i = make_instance(1, {{0, 2, 1}, {2, 4, 1}});
    Schedule s;
    s.placements.push_back({0, 1, 0});
    s.placements.push_back({9, 1, 2});  // not an instance job
    std::vector<std::string> reasons;
    CHECK_FALSE(verify_schedule(i, s, &reasons));
    bool missing = false, unknown = false;
    for (const auto& r : reasons) {
        missing = missing || r.find("not scheduled") != std::string::npos;
        unknown = unknown || r.find("unknown job") != std::string::npos;
    }
    CHECK(missing);
    CHECK(unknown);
}

TEST_CASE("duplicate placement of one job fails") {
    const Instance i = make_instance(2, {{0, 4, 1}});
    Schedule s;
    s.placements.push_back({0, 1, 0});
    s.placements.push_back({0, 2, 0});
    CHECK_FALSE(verify_schedule(i, s));
}

TEST_CASE("machine index outside 1..m fails") {
    Schedule s;
    s.placements.push_back({0, 2, 0});
    CHECK_FALSE(verify_schedule(kTight, s));
    s.placements[0].machine = 0;
    CHECK_FALSE(verify_schedule(kTight, s));
}

TEST_CASE("start before release fails") {
    const Instance i = make_instance(1, {{3, 7, 2}});
    Schedule s;
    s.placements.push_back({0, 1, 2});
    CHECK_FALSE(verify_schedule(i, s));
}

TEST_CASE("empty schedule of the empty instance verifies") {
    Instance i;
    CHECK(verify_schedule(i, Schedule{}));
}

TEST_CASE("verification is invariant under shifting instance and starts") {
    const Instance i = make_instance(2, {{0, 4, 2}, {1, 5, 2}, {2, 8, 3}});
    Schedule s;
    s.placements.push_back({0, 1, 0});
    s.placements.push_back({1, 2, 1});
    s.placements.push_back({2, 1, 3});
    REQUIRE(verify_schedule(i, s));

    for (const Time delta : {1, 17, 1000}) {
        Instance shifted = i;
        for (Job& j : shifted.jobs) {
            j.release += delta;
            j.deadline += delta;
        }
        Schedule moved = s;
        for (Placement& p : moved.placements) p.start += delta;
        CHECK(verify_schedule(shifted, moved));
        CHECK_FALSE(verify_schedule(shifted, s));  // unshifted starts precede releases
    }
}
