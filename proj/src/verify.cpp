#include "aiisac/verify.hpp"

#include "aiisac/bottleneck.hpp"
#include "aiisac/commands.hpp"
#include "aiisac/errors.hpp"
#include "aiisac/fading_perf.hpp"
#include "aiisac/mimo_perf.hpp"
#include "aiisac/region.hpp"

#include <boost/math/special_functions/expint.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace aiisac {

bool VerifyReport::all_passed() const { return failures() == 0; }

std::size_t VerifyReport::failures() const
{
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
}

std::string VerifyReport::text() const
{
    std::string out = preamble;
    for (const auto& c : checks) {
        out += fmt::format("{} {} observed={} criterion: {}\n", c.passed ? "PASS" : "FAIL", c.name,
                           format_number(c.observed), c.criterion);
    }
    out += fmt::format("summary: {} checks, {} passed, {} failed\n", checks.size(), checks.size() - failures(),
                       failures());
    return out;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Check at_most(std::string name, double observed, double bound)
{
    return {std::move(name), observed, fmt::format("<= {}", bound), observed <= bound};
}

Check at_least(std::string name, double observed, double bound)
{
    return {std::move(name), observed, fmt::format(">= {}", bound), observed >= bound};
}

Check within(std::string name, double observed, double lo, double hi)
{
    return {std::move(name), observed, fmt::format("in [{}, {}]", lo, hi), observed >= lo && observed <= hi};
}

// Standard normal pair from one counter block.
std::array<double, 2> normal_pair(const RandomStream& s, std::uint64_t counter)
{
    const auto u = s.uniform_pair(counter);
    const double r = std::sqrt(-2.0 * std::log(u[0]));
    const double t = 2.0 * std::numbers::pi * u[1];
    return {r * std::cos(t), r * std::sin(t)};
}

double budget_kappa(double c) { return c == 0.0 ? kInf : kappa(AiBudget(c)); }

void quadrature_checks(const RunConfig& cfg, std::vector<Check>& out)
{
    const auto rule = gauss_laguerre(cfg.quadrature_order);
    const auto reference = gauss_laguerre(80);
    double worst = 0.0;
    for (double snr_db = -5.0; snr_db <= 25.0; snr_db += 1.0) {
        for (double c : {0.5, 1.0, 2.0, 4.0, 8.0}) {
            const double g = db_to_linear(snr_db);
            const double k = budget_kappa(c);
            worst = std::max(worst, std::fabs(ergodic_rate_rayleigh(g, k, rule) - ergodic_rate_rayleigh(g, k, reference)));
        }
    }
    out.push_back(at_most(fmt::format("quadrature_order_{}_vs_80", cfg.quadrature_order), worst, 1e-4));

    const double exact = std::exp(0.1) * boost::math::expint(1, 0.1) / std::numbers::ln2;
    out.push_back(at_most("rayleigh_anchor_kappa0_snr10", std::fabs(ergodic_rate_rayleigh(10.0, 0.0, rule) - exact), 1e-6));
}

void monte_carlo_checks(const RunConfig& cfg, std::vector<Check>& out)
{
    const auto rule = gauss_laguerre(cfg.quadrature_order);
    const FadingModel models[] = {FadingModel::rayleigh(), FadingModel::rician(cfg.rician_k)};
    double worst_rate = 0.0;
    double worst_dist = 0.0;
    std::uint64_t stream = 1000;
    for (const auto& m : models) {
        for (double snr_db : {0.0, 10.0, 20.0}) {
            for (double c : {1.0, 4.0, 8.0}) {
                const double g = db_to_linear(snr_db);
                const double k = budget_kappa(c);
                const auto mc = monte_carlo_oracle(m, g, k, cfg.prior_var, cfg.verify_mc_samples,
                                                   RandomStream(cfg.seed, stream++));
                worst_rate = std::max(worst_rate, std::fabs(ergodic_rate(m, g, k, rule) - mc.rate));
                worst_dist = std::max(worst_dist,
                                      std::fabs(ergodic_distortion(m, g, k, cfg.prior_var, rule) - mc.distortion) /
                                          cfg.prior_var);
            }
        }
    }
    out.push_back(at_most("monte_carlo_rate_gap", worst_rate, 3e-3));
    out.push_back(at_most("monte_carlo_distortion_gap_rel", worst_dist, 3e-3));
}

void covariance_map_checks(const RunConfig& cfg, std::vector<Check>& out)
{
    const RandomStream rng(cfg.seed, 2000);
    std::uint64_t counter = 0;
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 4);
        const std::size_t r = 1 + static_cast<std::size_t>((trial / 4) % n);
        CMatrix a(n, r);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < r; ++j) {
                const auto z = normal_pair(rng, counter++);
                a(i, j) = Complex(z[0], z[1]);
            }
        }
        const HermitianMatrix q(a * a.adjoint());
        const double c = 0.5 * static_cast<double>(1 + trial % 16);
        worst = std::max(worst, std::fabs(gaussian_mi(q, covariance_map(q, AiBudget(c))) - c));
    }
    out.push_back(at_most("covariance_map_mi_equality", worst, 1e-9));

    // Diagonal rank-2 Q: search diagonal R_z on the MI-constraint curve for a smaller trace.
    double worst_gain = -kInf;
    for (int trial = 0; trial < 10; ++trial) {
        const auto u = rng.uniform_pair(counter++);
        const double q1 = 0.5 + 4.0 * u[0];
        const double q2 = 0.5 + 4.0 * u[1];
        const double c = 1.0 + static_cast<double>(trial % 7);
        const HermitianMatrix q(CMatrix::diagonal({q1, q2}));
        const double scaled_trace = covariance_map(q, AiBudget(c)).matrix().trace().real();
        const double total = std::exp2(c);
        const double d1_min = q1 / (total - 1.0);
        double best = kInf;
        constexpr int kGrid = 20000;
        for (int i = 1; i <= kGrid; ++i) {
            const double d1 = d1_min * std::pow(1e4, static_cast<double>(i) / kGrid);
            const double rest = total / (1.0 + q1 / d1);
            const double d2 = q2 / (rest - 1.0);
            best = std::min(best, d1 + d2);
        }
        worst_gain = std::max(worst_gain, (scaled_trace - best) / scaled_trace);
    }
    out.push_back(at_most("covariance_map_min_trace_grid_improvement_rel", worst_gain, 1e-9));
}

void gaussian_checks(const RunConfig& cfg, std::vector<Check>& out)
{
    const ScalarScenario sc = cfg.scenario();
    const double grid[] = {4.0, 5.0, 6.0, 7.0, 8.0};
    out.push_back(within("scaling_gap_slope", scaling_gap(sc, grid), -1.15, -0.85));

    const auto rule = gauss_laguerre(cfg.quadrature_order);
    const FadingModel rician = FadingModel::rician(cfg.rician_k);
    const double snr_c = sc.gain_c * sc.power / sc.noise_c;
    const double snr_s = sc.gain_s * sc.power / sc.noise_s;
    double margin = kInf;
    for (double c : uniform_grid(cfg.sweep_c_min, cfg.sweep_c_max, cfg.sweep_c_step)) {
        const double k = budget_kappa(c);
        const double r_awgn = std::log2(1.0 + conditional_snr(1.0, snr_c, k));
        const double d_awgn = sc.prior_var / (1.0 + conditional_snr(1.0, snr_s, k));
        margin = std::min({margin, ergodic_rate(rician, snr_c, k, rule) - r_awgn,
                           r_awgn - ergodic_rate_rayleigh(snr_c, k, rule),
                           d_awgn - ergodic_distortion(rician, snr_s, k, sc.prior_var, rule),
                           ergodic_distortion_rayleigh(snr_s, k, sc.prior_var, rule) - d_awgn});
    }
    out.push_back(at_least("fading_ordering_margin", margin, -1e-12));
}

void region_checks(const RunConfig& cfg, std::vector<Check>& out)
{
    const ScalarScenario sc = cfg.scenario();
    const int n = cfg.frontier_points;
    const double nested[] = {0.5, 2.0, 4.0, 6.0};
    double margin = kInf;
    for (std::size_t i = 0; i < std::size(nested); ++i) {
        const Frontier lo = frontier(sc, AiBudget(nested[i]), n);
        for (std::size_t j = i + 1; j < std::size(nested); ++j) {
            const Frontier hi = frontier(sc, AiBudget(nested[j]), n);
            for (std::size_t p = 0; p < lo.points.size(); ++p) {
                margin = std::min({margin, hi.points[p].rate - lo.points[p].rate,
                                   (lo.points[p].distortion - hi.points[p].distortion) / sc.prior_var});
            }
        }
    }
    out.push_back(at_least("frontier_nesting_margin", margin, -1e-12));

    const FrontierGap gap = sup_distance(frontier(sc, AiBudget(12.0), n), frontier(sc, AiBudget::unlimited(), n));
    out.push_back(at_most("frontier_classical_limit_gap", std::max(gap.rate, gap.distortion / sc.prior_var), 1e-3));

    double fraction = 1.0;
    for (double c : cfg.frontier_budgets) {
        if (c == 0.0) {
            continue;
        }
        const AiBudget b(c);
        fraction = std::min(fraction, dominance_fraction(frontier(sc, b, n), separated_baseline(sc, b, n)));
    }
    out.push_back(at_least("joint_dominates_separated_fraction", fraction, 0.95));
}

void mimo_checks(const RunConfig& cfg, std::vector<Check>& out)
{
    const auto c_grid = uniform_grid(cfg.mimo_c_min, cfg.mimo_c_max, cfg.mimo_c_step);
    const auto snr_grid = uniform_grid(cfg.mimo_snr_min_db, cfg.mimo_snr_max_db, cfg.mimo_snr_step_db);
    const MimoScenario tmpl = mimo_template(cfg);
    const auto rates = rate_surface(tmpl, c_grid, snr_grid);
    const std::size_t ns = snr_grid.size();
    double step = kInf;
    for (std::size_t i = 0; i < c_grid.size(); ++i) {
        for (std::size_t j = 0; j < ns; ++j) {
            if (i > 0) {
                step = std::min(step, rates[i * ns + j] - rates[(i - 1) * ns + j]);
            }
            if (j > 0) {
                step = std::min(step, rates[i * ns + j] - rates[i * ns + j - 1]);
            }
        }
    }
    out.push_back(at_least("mimo_surface_monotone_min_step", step, -1e-12));

    const auto at = [&](double c, double snr_db) {
        return rate_surface(tmpl, {c}, {snr_db}).front();
    };
    out.push_back(at_most("mimo_saturation_gain_6_to_8_at_20db", (at(8.0, 20.0) - at(6.0, 20.0)) / at(6.0, 20.0), 0.05));
    double lo = kInf;
    double hi = -kInf;
    for (double c : c_grid) {
        const double r = at(c, -5.0);
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    out.push_back(at_most("mimo_low_snr_spread_at_minus5db", hi - lo, 0.2));

    // 1x1 reduction and the two determinant paths on seeded scenarios.
    const RandomStream rng(cfg.seed, 3000);
    double scalar_gap = 0.0;
    double path_gap = 0.0;
    for (std::uint64_t t = 0; t < 20; ++t) {
        const auto u = rng.uniform_pair(2 * t);
        const auto v = rng.uniform_pair(2 * t + 1);
        ScalarScenario sc;
        sc.power = 0.1 + 10.0 * u[0];
        sc.gain_c = 0.1 + 2.0 * u[1];
        sc.noise_c = 0.05 + v[0];
        const double c = 0.5 + 7.5 * v[1];
        MimoScenario m;
        m.h_c = CMatrix{{std::sqrt(sc.gain_c)}};
        m.h_s = m.h_c;
        m.q = HermitianMatrix(CMatrix{{sc.power}});
        m.r_c = HermitianMatrix(CMatrix{{sc.noise_c}});
        m.r_s = m.r_c;
        m.dmu = {1.0};
        m.power = sc.power;
        m.budget = AiBudget(c);
        scalar_gap = std::max(scalar_gap, std::fabs(mimo_rate(m) - rate(sc, AiBudget(c))));
    }
    for (double c : {0.5, 2.0, 8.0, kInf}) {
        for (double snr_db : {-5.0, 10.0, 25.0}) {
            MimoScenario m = tmpl;
            const double s = db_to_linear(snr_db);
            m.q = s * tmpl.q;
            m.power = s * tmpl.power;
            m.budget = AiBudget(c);
            path_gap = std::max(path_gap, std::fabs(mimo_rate(m) - mimo_rate_whitened(m)));
        }
    }
    out.push_back(at_most("mimo_scalar_reduction_gap", scalar_gap, 1e-12));
    out.push_back(at_most("mimo_determinant_paths_gap", path_gap, 1e-10));
}

void theory_vs_achieved(const RunConfig& cfg, std::vector<Check>& out)
{
    const ScalarScenario sc = cfg.scenario();
    const double alpha = cfg.verify_alpha;
    double worst = 0.0;
    for (double c = 0.5; c <= 8.0 + 1e-12; c += 0.25) {
        const PerfPoint theory = split_performance(sc, AiBudget(c), alpha);
        const double n_z = enforce_mi_numerically(sc.power, c, 1e-12);
        const double snr_c = effective_snr(sc.gain_c, alpha * sc.power, sc.noise_c, n_z);
        const double snr_s = effective_snr(sc.gain_s, (1.0 - alpha) * sc.power, sc.noise_s, n_z);
        worst = std::max({worst, std::fabs(theory.rate - std::log2(1.0 + snr_c)),
                          std::fabs(theory.distortion - sc.prior_var / (1.0 + snr_s))});
    }
    out.push_back(at_most(fmt::format("theory_vs_achieved_alpha_{}", alpha), worst, 1e-9));
}

void allocation_checks(const RunConfig& cfg, std::vector<Check>& out)
{
    const AllocationProblem problem = cfg.allocation_problem();
    const AllocationResult res = optimize_alpha(problem, cfg.alloc_alpha0, cfg.alloc_max_iter, cfg.alloc_tol);
    out.push_back(at_most("optimizer_alpha_star_distance_to_1", std::fabs(res.alpha_star - 1.0), 2e-3));
    out.push_back(at_most("optimizer_iterations", res.iterations, 50));
    double mi_dev = 0.0;
    double descent = 0.0;
    for (std::size_t i = 0; i < res.trace.size(); ++i) {
        mi_dev = std::max(mi_dev, std::fabs(res.trace[i].achieved_mi - cfg.alloc_c_ai));
        if (i > 0) {
            descent = std::max(descent, res.trace[i - 1].objective - res.trace[i].objective);
        }
    }
    out.push_back(at_most("optimizer_achieved_mi_deviation", mi_dev, 1e-9));
    out.push_back(at_most("optimizer_objective_decrease", descent, 0.0));

    // Seeded weighted-mode problems for the stationarity checks.
    const RandomStream rng(cfg.seed, 4000);
    double fd_worst = 0.0;
    double grid_worst = 0.0;
    double classical_worst = 0.0;
    int interior = 0;
    for (std::uint64_t t = 0; t < 20; ++t) {
        const auto u = rng.uniform_pair(3 * t);
        const auto v = rng.uniform_pair(3 * t + 1);
        const auto w = rng.uniform_pair(3 * t + 2);
        AllocationProblem p;
        p.scenario = {1.0 + 19.0 * u[0], 0.5 + 1.5 * u[1], 0.5 + 1.5 * v[0], 0.1, 0.1, 0.5 + 1.5 * v[1]};
        p.budget = AiBudget(1.0 + 7.0 * w[0]);
        p.weight = 0.1 + 0.8 * w[1];
        p.mode = ObjectiveMode::weighted;
        const double power = p.power();

        const double pc = power * (0.05 + 0.9 * u[1]);
        const double h = 1e-5 * power;
        const SplitTerms t0 = split_terms(p, pc);
        const double fd_r = (split_terms(p, pc + h).rate - split_terms(p, pc - h).rate) / (2.0 * h);
        // D depends on P_s = P - P_c.
        const double fd_d = (split_terms(p, pc - h).distortion - split_terms(p, pc + h).distortion) / (2.0 * h);
        fd_worst = std::max({fd_worst, std::fabs(fd_r - t0.rate_dpc) / std::fabs(t0.rate_dpc),
                             std::fabs(fd_d - t0.distortion_dps) / std::fabs(t0.distortion_dps)});

        const PowerSplit split = kkt_power_split(p);
        if (split.interior) {
            ++interior;
            constexpr int kGrid = 10000;
            double best_j = -kInf;
            double best_pc = 0.0;
            for (int i = 0; i <= kGrid; ++i) {
                const double a = static_cast<double>(i) / kGrid;
                const double j = objective(p, a);
                if (j > best_j) {
                    best_j = j;
                    best_pc = a * power;
                }
            }
            grid_worst = std::max(grid_worst, std::fabs(split.power_c - best_pc) / power);

            AllocationProblem far = p;
            far.budget = AiBudget(30.0);
            AllocationProblem classical = p;
            classical.budget = AiBudget::unlimited();
            classical_worst = std::max(
                classical_worst, std::fabs(kkt_power_split(far).power_c - kkt_power_split(classical).power_c) / power);
        }
    }
    out.push_back(at_most("kkt_gradient_fd_rel_error", fd_worst, 1e-6));
    out.push_back(at_least("kkt_interior_cases", interior, 1));
    out.push_back(at_most("kkt_interior_vs_grid_rel", grid_worst, 1e-4));
    out.push_back(at_most("kkt_c30_vs_classical_rel", classical_worst, 1e-6));
}

}  // namespace

VerifyReport run_verify(const RunConfig& cfg)
{
    cfg.validate();
    VerifyReport report;
    report.preamble = fmt::format("# aiisac verify {}\n# mc_samples={} alpha={}\n", cfg.describe(),
                                  cfg.verify_mc_samples, cfg.verify_alpha);
    quadrature_checks(cfg, report.checks);
    monte_carlo_checks(cfg, report.checks);
    covariance_map_checks(cfg, report.checks);
    gaussian_checks(cfg, report.checks);
    region_checks(cfg, report.checks);
    mimo_checks(cfg, report.checks);
    theory_vs_achieved(cfg, report.checks);
    allocation_checks(cfg, report.checks);
    return report;
}

}  // namespace aiisac
