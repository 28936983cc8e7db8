#include "aiisac/errors.hpp"
#include "aiisac/region.hpp"

#include <doctest.h>

#include <cmath>

using namespace aiisac;

namespace {

ScalarScenario table_scenario()
{
    return {0.01, 1.0, 1.0, 0.1, 0.1, 1.0};
}

ScalarScenario unit_scenario()
{
    return {1.0, 1.0, 1.0, 0.1, 0.1, 1.0};
}

}  // namespace

TEST_CASE("frontier endpoints")
{
    const auto sc = unit_scenario();
    const auto f = frontier(sc, AiBudget(2.0));
    REQUIRE(f.points.size() == 201);
    CHECK(f.points.front().alpha == 0.0);
    CHECK(f.points.back().alpha == 1.0);
    CHECK(f.points.front().rate == 0.0);
    CHECK(f.points.back().distortion == sc.prior_var);
    // alpha = 0: all power to sensing, snr = 10 / (1 + 10/3).
    CHECK(f.points.front().distortion == doctest::Approx(1.0 / (1.0 + 10.0 / (1.0 + 10.0 / 3.0))).epsilon(1e-14));
    CHECK(f.points.back().rate == doctest::Approx(rate(sc, AiBudget(2.0))).epsilon(1e-14));
    for (std::size_t i = 1; i < f.points.size(); ++i) {
        CHECK(f.points[i].rate >= f.points[i - 1].rate);
        CHECK(f.points[i].distortion >= f.points[i - 1].distortion);
    }
    CHECK_THROWS_AS(frontier(sc, AiBudget(2.0), 1), InvalidArgument);
}

TEST_CASE("zero budget collapses the region")
{
    const auto f = frontier(unit_scenario(), AiBudget(0.0), 11);
    for (const auto& p : f.points) {
        CHECK(p.rate == 0.0);
        CHECK(p.distortion == 1.0);
    }
}

TEST_CASE("frontiers are nested in the budget")
{
    for (const auto& sc : {table_scenario(), unit_scenario()}) {
        Frontier prev = frontier(sc, AiBudget(0.5));
        for (double c : {2.0, 4.0, 6.0}) {
            const Frontier cur = frontier(sc, AiBudget(c));
            for (std::size_t i = 0; i < cur.points.size(); ++i) {
                CHECK(cur.points[i].rate >= prev.points[i].rate);
                CHECK(cur.points[i].distortion <= prev.points[i].distortion);
            }
            prev = cur;
        }
        const Frontier inf = frontier(sc, AiBudget::unlimited());
        for (std::size_t i = 0; i < inf.points.size(); ++i) {
            CHECK(inf.points[i].rate >= prev.points[i].rate);
        }
    }
}

TEST_CASE("classical limit")
{
    const auto sc = table_scenario();
    const auto gap = sup_distance(frontier(sc, AiBudget(30.0)), frontier(sc, AiBudget::unlimited()));
    CHECK(gap.rate <= 1e-6);
    CHECK(gap.distortion <= 1e-6);
    CHECK_THROWS_AS(sup_distance(frontier(sc, AiBudget(3.0), 11), frontier(sc, AiBudget(3.0), 12)), InvalidArgument);
}

TEST_CASE("joint design dominates time sharing")
{
    for (const auto& sc : {table_scenario(), unit_scenario()}) {
        for (double c : {0.5, 2.0, 4.0, 6.0}) {
            const auto joint = frontier(sc, AiBudget(c));
            const auto sep = separated_baseline(sc, AiBudget(c));
            CHECK(dominance_fraction(joint, sep) >= 0.95);
        }
    }
    const auto sep = separated_baseline(unit_scenario(), AiBudget(2.0), 3);
    CHECK(sep.points[0].rate == 0.0);
    CHECK(sep.points[2].distortion == 1.0);
    CHECK(sep.points[1].rate == doctest::Approx(0.5 * rate(unit_scenario(), AiBudget(2.0))).epsilon(1e-14));
}

TEST_CASE("in_region")
{
    const auto sc = unit_scenario();
    const AiBudget c(2.0);
    const PerfPoint mid = split_performance(sc, c, 0.5);
    const auto on = in_region(sc, c, mid);
    CHECK(on.inside);
    CHECK(on.alpha == doctest::Approx(0.5));
    CHECK(on.slack >= -1e-12);

    CHECK(in_region(sc, c, {0.0, 1.0}).inside);
    CHECK(in_region(sc, c, {mid.rate - 0.01, mid.distortion + 0.01}).inside);
    const auto out = in_region(sc, c, {mid.rate + 0.05, mid.distortion});
    CHECK_FALSE(out.inside);
    CHECK(out.slack < 0.0);
    CHECK_FALSE(in_region(sc, c, {2.5, 1.0}).inside);  // above the 2-bit ceiling
    CHECK_FALSE(in_region(sc, AiBudget(0.0), {0.01, 1.0}).inside);
    CHECK_THROWS_AS(in_region(sc, c, {std::nan(""), 0.5}), InvalidArgument);
}
