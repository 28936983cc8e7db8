#include "aiisac/errors.hpp"
#include "aiisac/gaussian_perf.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace aiisac;

namespace {

ScalarScenario unit_scenario()
{
    return {1.0, 1.0, 1.0, 0.1, 0.1, 1.0};
}

// Default scalars: 10 dBm transmit power.
ScalarScenario table_scenario()
{
    return {0.01, 1.0, 1.0, 0.1, 0.1, 1.0};
}

}  // namespace

TEST_CASE("effective_snrs examples")
{
    const auto sc = unit_scenario();
    CHECK(effective_snrs(sc, AiBudget::unlimited()).comm == doctest::Approx(10.0).epsilon(1e-15));
    CHECK(effective_snrs(sc, AiBudget(1.0)).comm == doctest::Approx(1.0 / 1.1).epsilon(1e-14));
    ScalarScenario blocked = sc;
    blocked.gain_c = 0.0;
    CHECK(effective_snrs(blocked, AiBudget(1.0)).comm == 0.0);
    CHECK_THROWS_AS(effective_snrs(sc, AiBudget(0.0)), DegenerateBudget);
    ScalarScenario bad = sc;
    bad.noise_s = 0.0;
    CHECK_THROWS_AS(effective_snrs(bad, AiBudget(1.0)), InvalidArgument);
}

TEST_CASE("rate and distortion examples")
{
    const auto sc = unit_scenario();
    CHECK(rate(sc, AiBudget::unlimited()) == doctest::Approx(std::log2(11.0)).epsilon(1e-15));
    CHECK(rate(sc, AiBudget(1.0)) == doctest::Approx(0.9329).epsilon(1e-4));
    CHECK(distortion(sc, AiBudget(1.0)) == doctest::Approx(0.5238).epsilon(1e-4));
    CHECK(rate(sc, AiBudget(0.0)) == 0.0);
    CHECK(distortion(sc, AiBudget(0.0)) == sc.prior_var);
    ScalarScenario blind = sc;
    blind.gain_s = 0.0;
    CHECK(distortion(blind, AiBudget(3.0)) == blind.prior_var);
}

TEST_CASE("monotonicity in the budget and classical limit")
{
    for (const auto& sc : {unit_scenario(), table_scenario()}) {
        double prev_r = rate(sc, AiBudget(0.0));
        double prev_d = distortion(sc, AiBudget(0.0));
        for (double c = 0.25; c <= 12.0; c += 0.25) {
            const double r = rate(sc, AiBudget(c));
            const double d = distortion(sc, AiBudget(c));
            CHECK(r > prev_r);
            CHECK(d < prev_d);
            prev_r = r;
            prev_d = d;
        }
        CHECK(std::fabs(rate(sc, AiBudget(30.0)) - rate(sc, AiBudget::unlimited())) <= 1e-6);
    }
}

TEST_CASE("info_to_distortion")
{
    CHECK(info_to_distortion(0.0, 3.0) == 3.0);
    CHECK(info_to_distortion(1.0, 3.0) == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(info_to_distortion(3.0, 2.0) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK_THROWS_AS(info_to_distortion(-0.1, 1.0), InvalidArgument);

    const auto sc = unit_scenario();
    for (double c : {0.5, 1.0, 4.0, 8.0}) {
        const double snr = effective_snrs(sc, AiBudget(c)).sensing;
        CHECK(info_to_distortion(std::log2(1.0 + snr), sc.prior_var) ==
              doctest::Approx(distortion(sc, AiBudget(c))).epsilon(1e-15));
    }
}

TEST_CASE("scaling_gap slope")
{
    const std::vector<double> grid{4.0, 5.0, 6.0, 7.0, 8.0};
    const double slope = scaling_gap(table_scenario(), grid);
    CHECK(slope >= -1.15);
    CHECK(slope <= -0.85);

    const std::vector<double> short_grid{4.0, 5.0, 6.0};
    CHECK_THROWS_AS(scaling_gap(table_scenario(), short_grid), InvalidArgument);
    const std::vector<double> with_inf{4.0, 5.0, 6.0, INFINITY};
    CHECK_THROWS_AS(scaling_gap(table_scenario(), with_inf), InvalidArgument);
    const std::vector<double> descending{8.0, 7.0, 6.0, 5.0};
    CHECK_THROWS_AS(scaling_gap(table_scenario(), descending), InvalidArgument);

    ScalarScenario blocked = table_scenario();
    blocked.gain_c = 0.0;
    CHECK_THROWS_AS(scaling_gap(blocked, grid), DegenerateFit);
}

TEST_CASE("gen_tradeoff_bound")
{
    CHECK(gen_tradeoff_bound(0.0, 10) == 0.0);
    CHECK(gen_tradeoff_bound(2.0, 100) == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(gen_tradeoff_bound(8.0, 2) == doctest::Approx(std::sqrt(8.0)).epsilon(1e-15));
    CHECK(gen_tradeoff_bound(3.0, 10) > gen_tradeoff_bound(2.0, 10));
    CHECK(gen_tradeoff_bound(2.0, 20) < gen_tradeoff_bound(2.0, 10));
    CHECK_THROWS_AS(gen_tradeoff_bound(-1.0, 10), InvalidArgument);
    CHECK_THROWS_AS(gen_tradeoff_bound(1.0, 0), InvalidArgument);
}
