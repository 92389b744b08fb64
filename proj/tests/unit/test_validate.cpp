#include "doctest.h"

#include "icsched/validate.hpp"
#include "test_helpers.hpp"

using namespace ics;
using ics::testing::make_instance;

TEST_CASE("well-formed instance yields an empty report") {
    const Instance i = make_instance(1, {{0, 2, 2}});
    CHECK(validate(i).ok());
}

TEST_CASE("processing beyond the window is flagged as window too short") {
    const Instance i = make_instance(1, {{0, 2, 3}});
    const ValidationReport report = validate(i);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].kind == Violation::Kind::WindowTooShort);
    CHECK(report.violations[0].message.find("window too short") != std::string::npos);
    CHECK(report.only_window_too_short());
}

TEST_CASE("zero machines is rejected") {
    Instance i;
    i.machines = 0;
    const ValidationReport report = validate(i);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].kind == Violation::Kind::MachinesBelowOne);
    CHECK(report.violations[0].message == "machines < 1");
}

TEST_CASE("structural violations are reported per job") {
    Instance i = make_instance(1, {{0, 2, 1}, {3, 3, 1}, {0, 4, 0}, {-1, 4, 1}});
    i.jobs.push_back({0, 0, 2, 1});  // duplicate id 0
    const ValidationReport report = validate(i);

    auto has = [&](Violation::Kind kind) {
        for (const auto& v : report.violations)
            if (v.kind == kind) return true;
        return false;
    };
    CHECK(has(Violation::Kind::NonPositiveWindow));
    CHECK(has(Violation::Kind::ProcessingBelowOne));
    CHECK(has(Violation::Kind::NegativeRelease));
    CHECK(has(Violation::Kind::DuplicateId));
    CHECK_FALSE(report.only_window_too_short());
}

TEST_CASE("times beyond the 62-bit guard are rejected") {
    const Instance i = make_instance(1, {{0, Time{1} << 62, 1}});
    const ValidationReport report = validate(i);
    REQUIRE_FALSE(report.ok());
    CHECK(report.violations[0].kind == Violation::Kind::TimeTooLarge);
}

TEST_CASE("empty instance with one machine is valid") {
    Instance i;
    i.machines = 1;
    CHECK(validate(i).ok());
}
