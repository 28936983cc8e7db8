#include "aiisac/gaussian_perf.hpp"

#include "aiisac/errors.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace aiisac {

namespace {

void require(bool ok, const std::string& field, const std::string& what)
{
    if (!ok) {
        throw InvalidArgument("ScalarScenario: " + field + " " + what);
    }
}

}  // namespace

void ScalarScenario::validate() const
{
    require(std::isfinite(power) && power > 0.0, "power", "must be positive and finite");
    require(std::isfinite(gain_c) && gain_c >= 0.0, "gain_c", "must be non-negative and finite");
    require(std::isfinite(gain_s) && gain_s >= 0.0, "gain_s", "must be non-negative and finite");
    require(std::isfinite(noise_c) && noise_c > 0.0, "noise_c", "must be positive and finite");
    require(std::isfinite(noise_s) && noise_s > 0.0, "noise_s", "must be positive and finite");
    require(std::isfinite(prior_var) && prior_var > 0.0, "prior_var", "must be positive and finite");
}

double effective_snr(double gain, double power, double noise, double n_z)
{
    if (gain == 0.0 || std::isinf(n_z)) {
        return 0.0;
    }
    return gain * power / (noise + gain * n_z);
}

EffectiveSnrs effective_snrs(const ScalarScenario& sc, AiBudget budget)
{
    sc.validate();
    const double n_z = equivalent_noise(budget, sc.power);
    return {effective_snr(sc.gain_c, sc.power, sc.noise_c, n_z),
            effective_snr(sc.gain_s, sc.power, sc.noise_s, n_z)};
}

double rate(const ScalarScenario& sc, AiBudget budget)
{
    if (budget.is_zero()) {
        sc.validate();
        return 0.0;
    }
    return std::log2(1.0 + effective_snrs(sc, budget).comm);
}

double distortion(const ScalarScenario& sc, AiBudget budget)
{
    if (budget.is_zero()) {
        sc.validate();
        return sc.prior_var;
    }
    return sc.prior_var / (1.0 + effective_snrs(sc, budget).sensing);
}

PerfPoint performance(const ScalarScenario& sc, AiBudget budget) { return {rate(sc, budget), distortion(sc, budget)}; }

double info_to_distortion(double info_bits, double prior_var)
{
    if (std::isnan(info_bits) || info_bits < 0.0) {
        throw InvalidArgument("info_to_distortion: information must be non-negative");
    }
    // Written as sigma^2 / (1 + (2^I - 1)) so it matches distortion() bit for bit.
    return prior_var / (1.0 + (std::exp2(info_bits) - 1.0));
}

double scaling_gap(const ScalarScenario& sc, std::span<const double> c_grid)
{
    if (c_grid.size() < 4) {
        throw InvalidArgument("scaling_gap: need at least 4 budgets");
    }
    for (std::size_t i = 0; i < c_grid.size(); ++i) {
        if (!std::isfinite(c_grid[i]) || !(c_grid[i] > 0.0)) {
            throw InvalidArgument("scaling_gap: budgets must be positive and finite");
        }
        if (i > 0 && !(c_grid[i] > c_grid[i - 1])) {
            throw InvalidArgument("scaling_gap: budgets must be strictly ascending");
        }
    }
    const double r_inf = rate(sc, AiBudget::unlimited());
    std::vector<double> y;
    for (std::size_t i = 0; i < c_grid.size(); ++i) {
        const double gap = r_inf - rate(sc, AiBudget(c_grid[i]));
        if (!(gap > 0.0)) {
            throw DegenerateFit("scaling_gap: non-positive rate gap at C = " + std::to_string(c_grid[i]));
        }
        y.push_back(std::log2(gap));
        if (i > 0 && !(y[i] < y[i - 1])) {
            throw DegenerateFit("scaling_gap: rate gap is not decreasing");
        }
    }
    const double n = static_cast<double>(c_grid.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < c_grid.size(); ++i) {
        mx += c_grid[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < c_grid.size(); ++i) {
        sxy += (c_grid[i] - mx) * (y[i] - my);
        sxx += (c_grid[i] - mx) * (c_grid[i] - mx);
    }
    return sxy / sxx;
}

double gen_tradeoff_bound(double mi_bits, long long n_tr)
{
    if (std::isnan(mi_bits) || mi_bits < 0.0) {
        throw InvalidArgument("gen_tradeoff_bound: information must be non-negative");
    }
    if (n_tr < 1) {
        throw InvalidArgument("gen_tradeoff_bound: need at least one training sample");
    }
    return std::sqrt(2.0 * mi_bits / static_cast<double>(n_tr));
}

}  // namespace aiisac
