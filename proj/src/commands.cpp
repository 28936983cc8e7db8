#include "aiisac/commands.hpp"

#include "aiisac/fading_perf.hpp"
#include "aiisac/mimo_perf.hpp"
#include "aiisac/region.hpp"

#include <fmt/format.h>

#include <cmath>
#include <limits>

namespace aiisac {

std::string format_number(double v)
{
    if (std::isinf(v)) {
        return v > 0.0 ? "inf" : "-inf";
    }
    return fmt::format("{:.17g}", v);
}

namespace {

std::string header(const std::string& command, const RunConfig& cfg)
{
    return fmt::format("# aiisac {} {}\n", command, cfg.describe());
}

double budget_kappa(AiBudget b)
{
    return b.is_zero() ? std::numeric_limits<double>::infinity() : kappa(b);
}

}  // namespace

std::string gaussian_sweep_csv(const RunConfig& cfg)
{
    cfg.validate();
    const ScalarScenario sc = cfg.scenario();
    const QuadratureRule rule = gauss_laguerre(cfg.quadrature_order);
    const double snr_c = sc.gain_c * sc.power / sc.noise_c;
    const double snr_s = sc.gain_s * sc.power / sc.noise_s;
    const FadingModel rician = FadingModel::rician(cfg.rician_k);

    std::string out = header("gaussian-sweep", cfg);
    out += fmt::format("# rician_k={}\n", cfg.rician_k);
    out += "c_ai,rate_awgn,rate_rayleigh,rate_rician,dist_awgn,dist_rayleigh,dist_rician\n";
    for (double c : uniform_grid(cfg.sweep_c_min, cfg.sweep_c_max, cfg.sweep_c_step)) {
        const AiBudget budget(c);
        const double k = budget_kappa(budget);
        const double values[] = {
            c,
            rate(sc, budget),
            ergodic_rate_rayleigh(snr_c, k, rule),
            ergodic_rate(rician, snr_c, k, rule),
            distortion(sc, budget),
            ergodic_distortion_rayleigh(snr_s, k, sc.prior_var, rule),
            ergodic_distortion(rician, snr_s, k, sc.prior_var, rule),
        };
        for (std::size_t i = 0; i < std::size(values); ++i) {
            out += format_number(values[i]);
            out += i + 1 < std::size(values) ? ',' : '\n';
        }
    }
    return out;
}

std::string frontier_csv(const RunConfig& cfg)
{
    cfg.validate();
    const ScalarScenario sc = cfg.scenario();
    std::string out = header("frontier", cfg);
    out += "c_ai,alpha,rate,distortion,baseline_rate,baseline_distortion\n";
    for (double c : cfg.frontier_budgets) {
        const AiBudget budget(c);
        const Frontier joint = frontier(sc, budget, cfg.frontier_points);
        const Frontier base = separated_baseline(sc, budget, cfg.frontier_points);
        for (std::size_t i = 0; i < joint.points.size(); ++i) {
            const auto& j = joint.points[i];
            const auto& b = base.points[i];
            out += fmt::format("{},{},{},{},{},{}\n", format_number(c), format_number(j.alpha),
                               format_number(j.rate), format_number(j.distortion), format_number(b.rate),
                               format_number(b.distortion));
        }
    }
    return out;
}

MimoScenario mimo_template(const RunConfig& cfg)
{
    return isotropic_template(static_cast<std::size_t>(cfg.mimo_n_t), static_cast<std::size_t>(cfg.mimo_n_r),
                              cfg.mimo_noise);
}

std::string mimo_surface_csv(const RunConfig& cfg)
{
    cfg.validate();
    const auto c_grid = uniform_grid(cfg.mimo_c_min, cfg.mimo_c_max, cfg.mimo_c_step);
    const auto snr_grid = uniform_grid(cfg.mimo_snr_min_db, cfg.mimo_snr_max_db, cfg.mimo_snr_step_db);
    const auto rates = rate_surface(mimo_template(cfg), c_grid, snr_grid);

    std::string out = header("mimo-surface", cfg);
    out += fmt::format("# n_t={} n_r={} noise={} q=isotropic\n", cfg.mimo_n_t, cfg.mimo_n_r, cfg.mimo_noise);
    out += "c_ai,snr_db,rate\n";
    std::size_t k = 0;
    for (double c : c_grid) {
        for (double snr : snr_grid) {
            out += fmt::format("{},{},{}\n", format_number(c), format_number(snr), format_number(rates[k++]));
        }
    }
    return out;
}

AllocateOutput allocate_csv(const RunConfig& cfg)
{
    cfg.validate();
    AllocateOutput res;
    res.result = optimize_alpha(cfg.allocation_problem(), cfg.alloc_alpha0, cfg.alloc_max_iter, cfg.alloc_tol);

    std::string out = header("allocate", cfg);
    out += fmt::format("# weight={} alpha0={} c_ai={} mode={} coupling={} time_split={}\n", cfg.alloc_weight,
                       cfg.alloc_alpha0, format_number(cfg.alloc_c_ai), mode_name(cfg.alloc_mode),
                       coupling_name(cfg.alloc_coupling), time_split_name(cfg.alloc_time_split));
    out += "iteration,alpha,objective,achieved_mi\n";
    for (const auto& t : res.result.trace) {
        out += fmt::format("{},{},{},{}\n", t.iteration, format_number(t.alpha), format_number(t.objective),
                           format_number(t.achieved_mi));
    }
    out += fmt::format("# summary alpha_star={} J_star={} kkt_residual={} iterations={} converged={}\n",
                       format_number(res.result.alpha_star), format_number(res.result.objective),
                       format_number(res.result.kkt_residual), res.result.iterations,
                       res.result.converged ? "true" : "false");
    res.csv = std::move(out);
    return res;
}

}  // namespace aiisac
