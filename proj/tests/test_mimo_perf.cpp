#include "aiisac/errors.hpp"
#include "aiisac/gaussian_perf.hpp"
#include "aiisac/mimo_perf.hpp"
#include "aiisac/numerics.hpp"

#include <doctest.h>

#include <cmath>

using namespace aiisac;

namespace {

MimoScenario scalar_mimo(double power, double gain, double noise, AiBudget budget)
{
    MimoScenario m;
    m.h_c = CMatrix{{std::sqrt(gain)}};
    m.h_s = m.h_c;
    m.q = HermitianMatrix(CMatrix{{power}});
    m.r_c = HermitianMatrix(CMatrix{{noise}});
    m.r_s = m.r_c;
    m.dmu = {1.0};
    m.power = power;
    m.budget = budget;
    return m;
}

MimoScenario random_mimo(RandomStream& rng, AiBudget budget)
{
    MimoScenario m;
    m.h_c = CMatrix(2, 2);
    m.h_s = CMatrix(2, 2);
    CMatrix a(2, 2);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            m.h_c(i, j) = Complex(rng.next_uniform() - 0.5, rng.next_uniform() - 0.5);
            m.h_s(i, j) = Complex(rng.next_uniform() - 0.5, rng.next_uniform() - 0.5);
            a(i, j) = Complex(rng.next_uniform() - 0.5, rng.next_uniform() - 0.5);
        }
    }
    m.q = HermitianMatrix(a * a.adjoint());
    m.power = m.q.matrix().trace().real();
    m.r_c = 0.1 * HermitianMatrix::identity(2);
    m.r_s = 0.2 * HermitianMatrix::identity(2);
    m.dmu = {Complex(rng.next_uniform(), 0.3), Complex(-0.2, rng.next_uniform())};
    m.budget = budget;
    return m;
}

}  // namespace

TEST_CASE("mimo_rate examples")
{
    MimoScenario m = isotropic_template(2, 2, 0.1);
    m.q = HermitianMatrix::identity(2);
    m.power = 2.0;
    CHECK(mimo_rate(m) == doctest::Approx(2.0 * std::log2(11.0)).epsilon(1e-14));
    m.h_c = CMatrix(2, 2);
    CHECK(mimo_rate(m) == 0.0);
}

TEST_CASE("scalar reduction")
{
    RandomStream rng(5, 0);
    for (int t = 0; t < 50; ++t) {
        ScalarScenario sc;
        sc.power = 0.01 + 10.0 * rng.next_uniform();
        sc.gain_c = 0.05 + 3.0 * rng.next_uniform();
        sc.noise_c = 0.01 + rng.next_uniform();
        const AiBudget budget(0.25 + 10.0 * rng.next_uniform());
        const auto m = scalar_mimo(sc.power, sc.gain_c, sc.noise_c, budget);
        CHECK(std::fabs(mimo_rate(m) - rate(sc, budget)) <= 1e-12);
    }
}

TEST_CASE("Fisher information and CRLB")
{
    const auto m = scalar_mimo(1.0, 1.0, 0.5, AiBudget::unlimited());
    MimoScenario g = m;
    g.dmu = {Complex(0.0, 2.0)};
    CHECK(fisher_info(g) == doctest::Approx(4.0 / 0.5).epsilon(1e-14));
    CHECK(crlb(g) == doctest::Approx(0.5 / 4.0).epsilon(1e-14));

    MimoScenario blind = m;
    blind.dmu = {0.0};
    CHECK(fisher_info(blind) == 0.0);
    CHECK_THROWS_AS(crlb(blind), UnobservableParameter);
}

TEST_CASE("Loewner monotonicity in the budget")
{
    RandomStream rng(6, 0);
    for (int t = 0; t < 30; ++t) {
        const auto base = random_mimo(rng, AiBudget::unlimited());
        double prev_rate = 0.0;
        double prev_info = 0.0;
        for (double c : {0.5, 1.0, 2.0, 4.0, 8.0, 16.0}) {
            MimoScenario m = base;
            m.budget = AiBudget(c);
            const double r = mimo_rate(m);
            const double f = fisher_info(m);
            CHECK(r >= prev_rate - 1e-12);
            CHECK(f >= prev_info - 1e-12);
            CHECK(std::fabs(r - mimo_rate_whitened(m)) <= 1e-10);
            prev_rate = r;
            prev_info = f;
        }
        CHECK(mimo_rate(base) >= prev_rate - 1e-12);
        CHECK(crlb(base) <= 1.0 / prev_info + 1e-12);
    }
}

TEST_CASE("rate_surface shape")
{
    const auto tmpl = isotropic_template(2, 2, 0.1);
    const std::vector<double> c_grid{0.5, 1.0, 2.0, 4.0, 6.0, 8.0};
    const std::vector<double> snr{-5.0, 0.0, 5.0, 10.0, 20.0};
    const auto surf = rate_surface(tmpl, c_grid, snr);
    REQUIRE(surf.size() == c_grid.size() * snr.size());
    for (std::size_t i = 0; i < c_grid.size(); ++i) {
        for (std::size_t j = 0; j < snr.size(); ++j) {
            if (i > 0) {
                CHECK(surf[i * snr.size() + j] >= surf[(i - 1) * snr.size() + j]);
            }
            if (j > 0) {
                CHECK(surf[i * snr.size() + j] >= surf[i * snr.size() + j - 1]);
            }
        }
    }
    MimoScenario single = tmpl;
    single.q = 10.0 * tmpl.q;
    single.power = 10.0 * tmpl.power;
    single.budget = AiBudget(3.0);
    CHECK(rate_surface(tmpl, {3.0}, {10.0}).front() == doctest::Approx(mimo_rate(single)).epsilon(1e-14));
    CHECK_THROWS_AS(rate_surface(tmpl, {}, snr), InvalidArgument);
}

TEST_CASE("per-stream bottleneck ceiling")
{
    // Each of the r streams is capped at 2^{C/r} - 1, so the rate stays below C bits.
    auto tmpl = isotropic_template(2, 2, 0.1);
    for (double c : {2.0, 6.0, 8.0}) {
        const double r = rate_surface(tmpl, {c}, {40.0}).front();
        CHECK(r <= c);
        CHECK(r >= 0.9 * c);
    }
}

TEST_CASE("scenario validation")
{
    MimoScenario m = isotropic_template(2, 2, 0.1);
    m.power = 0.01;
    CHECK_THROWS_AS(mimo_rate(m), InvalidArgument);
    MimoScenario d = isotropic_template(2, 2, 0.1);
    d.dmu = {1.0};
    CHECK_THROWS_AS(fisher_info(d), InvalidArgument);
}
