#include "aiisac/region.hpp"

#include "aiisac/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace aiisac {

namespace {

double latent_noise(AiBudget budget, double power)
{
    if (budget.is_zero()) {
        return std::numeric_limits<double>::infinity();
    }
    return equivalent_noise(budget, power);
}

void check_fraction(double v, const char* name)
{
    if (!(v >= 0.0 && v <= 1.0)) {
        throw InvalidArgument(std::string(name) + " must be in [0, 1]");
    }
}

double grid_value(int i, int n) { return i == n - 1 ? 1.0 : static_cast<double>(i) / (n - 1); }

}  // namespace

PerfPoint split_performance(const ScalarScenario& sc, AiBudget budget, double alpha)
{
    sc.validate();
    check_fraction(alpha, "alpha");
    const double n_z = latent_noise(budget, sc.power);
    const double snr_c = effective_snr(sc.gain_c, alpha * sc.power, sc.noise_c, n_z);
    const double snr_s = effective_snr(sc.gain_s, (1.0 - alpha) * sc.power, sc.noise_s, n_z);
    return {std::log2(1.0 + snr_c), sc.prior_var / (1.0 + snr_s)};
}

PerfPoint separated_performance(const ScalarScenario& sc, AiBudget budget, double tau)
{
    sc.validate();
    check_fraction(tau, "tau");
    const double n_z = latent_noise(budget, sc.power);
    const double snr_c = effective_snr(sc.gain_c, sc.power, sc.noise_c, n_z);
    const double snr_s = effective_snr(sc.gain_s, sc.power, sc.noise_s, n_z);
    return {tau * std::log2(1.0 + snr_c), sc.prior_var / (1.0 + (1.0 - tau) * snr_s)};
}

Frontier frontier(const ScalarScenario& sc, AiBudget budget, int n_points)
{
    if (n_points < 2) {
        throw InvalidArgument("frontier: need at least 2 points");
    }
    Frontier f{budget, {}};
    for (int i = 0; i < n_points; ++i) {
        const double alpha = grid_value(i, n_points);
        const PerfPoint p = split_performance(sc, budget, alpha);
        f.points.push_back({alpha, p.rate, p.distortion});
    }
    return f;
}

Frontier separated_baseline(const ScalarScenario& sc, AiBudget budget, int n_points)
{
    if (n_points < 2) {
        throw InvalidArgument("separated_baseline: need at least 2 points");
    }
    Frontier f{budget, {}};
    for (int i = 0; i < n_points; ++i) {
        const double tau = grid_value(i, n_points);
        const PerfPoint p = separated_performance(sc, budget, tau);
        f.points.push_back({tau, p.rate, p.distortion});
    }
    return f;
}

RegionVerdict in_region(const ScalarScenario& sc, AiBudget budget, PerfPoint candidate, int grid_points)
{
    if (grid_points < 2) {
        throw InvalidArgument("in_region: need at least 2 grid points");
    }
    if (std::isnan(candidate.rate) || std::isnan(candidate.distortion)) {
        throw InvalidArgument("in_region: candidate must not be NaN");
    }
    RegionVerdict best{false, 0.0, -std::numeric_limits<double>::infinity()};
    for (int i = 0; i < grid_points; ++i) {
        const double alpha = grid_value(i, grid_points);
        const PerfPoint p = split_performance(sc, budget, alpha);
        const double slack =
            std::min(p.rate - candidate.rate, (candidate.distortion - p.distortion) / sc.prior_var);
        if (slack > best.slack) {
            best.slack = slack;
            best.alpha = alpha;
        }
    }
    best.inside = best.slack >= -1e-12;
    return best;
}

double dominance_fraction(const Frontier& joint, const Frontier& baseline)
{
    if (joint.points.size() < 2 || baseline.points.empty()) {
        throw InvalidArgument("dominance_fraction: frontiers too small");
    }
    const auto& j = joint.points;
    std::size_t wins = 0;
    for (const auto& b : baseline.points) {
        // Joint distortion is non-decreasing in alpha; interpolate rate at matched distortion.
        double rate_at = 0.0;
        if (b.distortion <= j.front().distortion) {
            rate_at = j.front().rate;
        } else if (b.distortion >= j.back().distortion) {
            rate_at = j.back().rate;
        } else {
            const auto it = std::lower_bound(j.begin(), j.end(), b.distortion,
                                             [](const FrontierPoint& p, double d) { return p.distortion < d; });
            const auto& hi = *it;
            const auto& lo = *(it - 1);
            const double span = hi.distortion - lo.distortion;
            const double t = span > 0.0 ? (b.distortion - lo.distortion) / span : 1.0;
            rate_at = lo.rate + t * (hi.rate - lo.rate);
        }
        if (rate_at >= b.rate - 1e-12) {
            ++wins;
        }
    }
    return static_cast<double>(wins) / static_cast<double>(baseline.points.size());
}

FrontierGap sup_distance(const Frontier& a, const Frontier& b)
{
    if (a.points.size() != b.points.size()) {
        throw InvalidArgument("sup_distance: frontiers sampled on different grids");
    }
    FrontierGap gap;
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        gap.rate = std::max(gap.rate, std::fabs(a.points[i].rate - b.points[i].rate));
        gap.distortion = std::max(gap.distortion, std::fabs(a.points[i].distortion - b.points[i].distortion));
    }
    return gap;
}

}  // namespace aiisac
