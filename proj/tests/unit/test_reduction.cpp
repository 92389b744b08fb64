#include <random>

#include "doctest.h"

#include "icsched/analysis.hpp"
#include "icsched/dp_solver.hpp"
#include "icsched/oracle.hpp"
#include "icsched/reduction.hpp"
#include "icsched/validate.hpp"
#include "icsched/verify.hpp"
#include "test_helpers.hpp"

using namespace ics;

namespace {
const BinPackingInstance kFourItems{3, {1, 2, 2, 3}, 3};
}

TEST_CASE("four-item reduction emits the documented jobs") {
    const ReductionOutput out = reduce_bin_packing(kFourItems, 1);
    CHECK(out.a_sum == 8);
    CHECK(out.big_b == 96);
    CHECK_FALSE(out.trivial);
    CHECK(out.instance.machines == 3);
    REQUIRE(out.instance.jobs.size() == 12);
    CHECK(validate(out.instance).ok());

    auto job = [&](int item, int copy) {
        const JobId id = out.job_map.at({item, copy});
        for (const Job& j : out.instance.jobs)
            if (j.id == id) return j;
        FAIL("job id not present");
        return Job{};
    };
    // carrier of item 1: window [0, 104), processing 97
    CHECK(job(1, 1).release == 0);
    CHECK(job(1, 1).processing == 97);
    CHECK(job(1, 1).deadline == 104);
    // plain copy of item 1
    CHECK(job(1, 2).processing == 96);
    CHECK(job(1, 2).deadline == 104);
    // carrier of the last item: deadline uses the bin volume
    CHECK(job(4, 1).release == 288);
    CHECK(job(4, 1).processing == 99);
    CHECK(job(4, 1).deadline == 387);
    // ids follow (item-1)*m + (copy-1)
    CHECK(out.job_map.at({1, 1}) == 0);
    CHECK(out.job_map.at({2, 1}) == 3);
    CHECK(out.job_map.at({4, 3}) == 11);
}

TEST_CASE("four-item reduction has the documented profile") {
    const ReductionOutput out = reduce_bin_packing(kFourItems, 1);
    const InstanceProfile p = profile(out.instance);
    CHECK(p.looseness == Rational(13, 12));  // (B+A)/B with equality at mn = 12
    CHECK(p.height == 6);
    CHECK(p.slack == 8);
    CHECK(p.ell == 104);
}

TEST_CASE("verify_reduction accepts the four-item output") {
    const ReductionOutput out = reduce_bin_packing(kFourItems, 1);
    const ReductionProperties props = verify_reduction(kFourItems, out, 1);
    CHECK(props.all_ok());
    CHECK(props.job_count == 12);
    CHECK(props.height == 6);
    CHECK(props.height_cap == 6);
    CHECK(props.looseness == Rational(13, 12));
    CHECK(props.looseness_cap == Rational(13, 12));
    CHECK(props.agreeable_ok);
}

TEST_CASE("volume above the item sum takes the trivial branch") {
    const BinPackingInstance bp{100, {1, 2}, 2};
    const ReductionOutput out = reduce_bin_packing(bp, 1);
    CHECK(out.trivial);
    CHECK(out.instance.machines == 2);
    REQUIRE(out.instance.jobs.size() == 1);
    CHECK(out.instance.jobs[0].processing == 1);
    CHECK(decide(out.instance).outcome == Outcome::Feasible);
    CHECK(verify_reduction(bp, out, 1).vacuous);
}

TEST_CASE("reduction parameter errors") {
    CHECK_THROWS_AS(reduce_bin_packing(BinPackingInstance{3, {1}, 1}, 1),
                    std::invalid_argument);  // n < 2
    CHECK_THROWS_AS(reduce_bin_packing(BinPackingInstance{3, {1, 1, 1}, 4}, 1),
                    std::invalid_argument);  // bins > items
    CHECK_THROWS_AS(reduce_bin_packing(kFourItems, 0), std::invalid_argument);
}

TEST_CASE("reduction arithmetic overflow is loud") {
    // A = 2^60, m*n = 4: B = 2^62 leaves the guarded range
    const BinPackingInstance bp{1, {std::int64_t{1} << 59, std::int64_t{1} << 59}, 2};
    CHECK_THROWS_AS(reduce_bin_packing(bp, 1), std::overflow_error);
}

TEST_CASE("two-item reductions are agreeable with four jobs") {
    for (std::int64_t a = 1; a <= 4; ++a)
        for (std::int64_t b = 1; b <= 4; ++b) {
            const BinPackingInstance bp{1, {a, b}, 2};  // V <= A always
            const ReductionOutput out = reduce_bin_packing(bp, 1);
            const ReductionProperties props = verify_reduction(bp, out, 1);
            CHECK(props.job_count == 4);
            CHECK(props.agreeable_ok);
            CHECK(props.all_ok());
        }
}

TEST_CASE("random reductions satisfy every structural property") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        BinPackingInstance bp;
        const std::size_t n = 2 + rng() % 4;
        for (std::size_t i = 0; i < n; ++i)
            bp.items.push_back(1 + static_cast<std::int64_t>(rng() % 9));
        bp.bins = 1 + static_cast<int>(rng() % n);
        bp.volume = 1 + static_cast<std::int64_t>(rng() % 20);
        const int c = 1 + static_cast<int>(rng() % 2);

        const ReductionOutput out = reduce_bin_packing(bp, c);
        CHECK(out.big_b >= 2 * out.a_sum);
        if (out.trivial) continue;
        const ReductionProperties props = verify_reduction(bp, out, c);
        CAPTURE(trial);
        CHECK(props.all_ok());
    }
}

TEST_CASE("witness partitions translate to verified schedules") {
    const ReductionOutput out = reduce_bin_packing(kFourItems, 1);

    SUBCASE("the documented partition") {
        // items 1 and 3 in the first bin, item 2 alone, item 4 alone
        const BinPartition partition{{0, 2}, {1}, {3}};
        const Schedule s = schedule_from_partition(kFourItems, out, partition);
        CHECK(verify_schedule(out.instance, s));
    }
    SUBCASE("the oracle's partition") {
        const auto partition = bin_packing_decide(kFourItems);
        REQUIRE(partition.has_value());
        const Schedule s = schedule_from_partition(kFourItems, out, *partition);
        CHECK(verify_schedule(out.instance, s));
    }
}

TEST_CASE("reduced feasibility mirrors bin-packing feasibility on samples") {
    SolveOptions options;
    options.budget = std::int64_t{1} << 50;

    const std::vector<BinPackingInstance> cases{
        {3, {1, 2, 2, 3}, 3},   // yes
        {2, {1, 1, 2}, 2},      // yes: {1,1},{2}
        {1, {1, 1, 2}, 2},      // no: item 2 exceeds the volume
        {4, {3, 3, 3}, 2},      // no: two bins cannot take three 3s
        {6, {3, 3, 3}, 2},      // yes
    };
    for (const BinPackingInstance& bp : cases) {
        const ReductionOutput out = reduce_bin_packing(bp, 1);
        const bool packs = bin_packing_decide(bp).has_value();
        CAPTURE(bp.volume);
        CHECK((decide(out.instance, options).outcome == Outcome::Feasible) == packs);
    }
}
