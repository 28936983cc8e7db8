#include "aiisac/allocate.hpp"

#include "aiisac/errors.hpp"
#include "aiisac/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace aiisac {

void AllocationProblem::validate() const
{
    scenario.validate();
    if (!(total_time > 0.0) || std::isinf(total_time)) {
        throw InvalidArgument("AllocationProblem: total_time must be positive and finite");
    }
    if (!(weight >= 0.0 && weight <= 1.0)) {
        throw InvalidArgument("AllocationProblem: weight must be in [0, 1]");
    }
    if (!(comm_time_fraction >= 0.0 && comm_time_fraction <= 1.0)) {
        throw InvalidArgument("AllocationProblem: comm_time_fraction must be in [0, 1]");
    }
}

namespace {

struct Weights {
    double rate;
    double distortion;
};

Weights weights(const AllocationProblem& p)
{
    if (p.mode == ObjectiveMode::penalty) {
        return {1.0, p.weight};
    }
    return {p.weight, 1.0 - p.weight};
}

double budget_kappa(AiBudget budget)
{
    return budget.is_zero() ? std::numeric_limits<double>::infinity() : kappa(budget);
}

// Effective SNR of one path and its derivative in that path's power.
struct Snr {
    double value;
    double slope;
};

Snr path_snr(double gain, double power, double noise, double kap, double n_z_total, NoiseCoupling coupling)
{
    if (gain == 0.0 || std::isinf(kap) || std::isinf(n_z_total)) {
        return {0.0, 0.0};
    }
    if (coupling == NoiseCoupling::total_power) {
        const double den = noise + gain * n_z_total;
        return {gain * power / den, gain / den};
    }
    const double den = noise + gain * kap * power;
    return {gain * power / den, gain * noise / (den * den)};
}

SplitTerms terms_with_noise(const AllocationProblem& p, double power_c, double n_z_total)
{
    const ScalarScenario& sc = p.scenario;
    const double power_s = std::max(0.0, sc.power - power_c);
    const double kap = budget_kappa(p.budget);
    const double tau_c = p.time_split == TimeSplit::energy ? p.comm_time_fraction : 1.0;
    const double tau_s = p.time_split == TimeSplit::energy ? 1.0 - p.comm_time_fraction : 1.0;

    const Snr c = path_snr(sc.gain_c, power_c, sc.noise_c, kap, n_z_total, p.coupling);
    const Snr s = path_snr(sc.gain_s, power_s, sc.noise_s, kap, n_z_total, p.coupling);
    const double snr_s = tau_s * s.value;

    SplitTerms t;
    t.rate = tau_c * std::log1p(c.value) / std::numbers::ln2;
    t.rate_dpc = tau_c * c.slope / ((1.0 + c.value) * std::numbers::ln2);
    t.distortion = sc.prior_var / (1.0 + snr_s);
    t.distortion_dps = -sc.prior_var * tau_s * s.slope / ((1.0 + snr_s) * (1.0 + snr_s));
    return t;
}

double closed_form_noise(const AllocationProblem& p)
{
    if (p.budget.is_zero()) {
        return std::numeric_limits<double>::infinity();
    }
    return equivalent_noise(p.budget, p.power());
}

double check_alpha(double alpha)
{
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw InvalidArgument("alpha must be in [0, 1]");
    }
    return alpha;
}

double value(const AllocationProblem& p, const SplitTerms& t)
{
    const Weights w = weights(p);
    return w.rate * t.rate - w.distortion * t.distortion;
}

// dJ / dalpha = P (w_R dR/dP_c + w_D dD/dP_s).
double alpha_gradient(const AllocationProblem& p, const SplitTerms& t)
{
    const Weights w = weights(p);
    return p.power() * (w.rate * t.rate_dpc + w.distortion * t.distortion_dps);
}

}  // namespace

SplitTerms split_terms(const AllocationProblem& problem, double power_c)
{
    problem.validate();
    if (!(power_c >= 0.0 && power_c <= problem.power())) {
        throw InvalidArgument("split_terms: P_c must be in [0, P]");
    }
    return terms_with_noise(problem, power_c, closed_form_noise(problem));
}

double objective(const AllocationProblem& problem, double alpha)
{
    problem.validate();
    check_alpha(alpha);
    return value(problem, terms_with_noise(problem, alpha * problem.power(), closed_form_noise(problem)));
}

AllocationResult optimize_alpha(const AllocationProblem& problem, double alpha0, int max_iter, double tol)
{
    problem.validate();
    check_alpha(alpha0);
    if (max_iter < 1 || !(tol > 0.0)) {
        throw InvalidArgument("optimize_alpha: need max_iter >= 1 and tol > 0");
    }
    const double power = problem.power();
    const AiBudget budget = problem.budget;

    // The latent noise is re-derived from the MI constraint at every iterate.
    const auto enforce = [&]() {
        if (budget.is_zero()) {
            return std::numeric_limits<double>::infinity();
        }
        if (budget.is_unlimited()) {
            return 0.0;
        }
        return enforce_mi_numerically(power, budget.bits(), 1e-12);
    };
    const auto achieved = [&](double n_z) {
        if (std::isinf(n_z)) {
            return 0.0;
        }
        if (n_z == 0.0) {
            return std::numeric_limits<double>::infinity();
        }
        return std::log2(1.0 + power / n_z);
    };
    const auto project = [](double a) { return std::clamp(a, 0.0, 1.0); };

    AllocationResult out;
    double alpha = alpha0;
    double n_z = enforce();
    SplitTerms t = terms_with_noise(problem, alpha * power, n_z);
    double j = value(problem, t);
    double g = alpha_gradient(problem, t);
    out.trace.push_back({0, alpha, j, achieved(n_z)});

    constexpr double kArmijo = 1e-4;
    constexpr double kMaxStep = 1e6;
    double step = 0.5;
    double projected = project(alpha + g) - alpha;
    if (std::fabs(projected) <= tol) {
        out.converged = true;
    }
    int it = 0;
    while (!out.converged && it < max_iter) {
        ++it;
        n_z = enforce();
        double candidate = alpha;
        SplitTerms ct = t;
        double cj = j;
        bool accepted = false;
        while (step > 1e-20) {
            candidate = project(alpha + step * g);
            ct = terms_with_noise(problem, candidate * power, n_z);
            cj = value(problem, ct);
            if (cj >= j + kArmijo * g * (candidate - alpha)) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) {
            // No ascent direction left at machine precision.
            out.converged = true;
            break;
        }
        const double delta = candidate - alpha;
        const double g_prev = g;
        alpha = candidate;
        t = ct;
        j = cj;
        g = alpha_gradient(problem, t);
        // Secant (Barzilai-Borwein) step for the next iterate; doubling when the curvature estimate is unusable.
        const double curvature = (g_prev - g) / delta;
        step = delta != 0.0 && curvature > 0.0 ? std::min(1.0 / curvature, kMaxStep) : std::min(2.0 * step, kMaxStep);
        out.trace.push_back({it, alpha, j, achieved(n_z)});
        projected = project(alpha + g) - alpha;
        if (std::fabs(delta) <= tol || std::fabs(projected) <= tol) {
            out.converged = true;
        }
    }
    out.alpha_star = alpha;
    out.power_c = alpha * power;
    out.power_s = power - out.power_c;
    out.objective = j;
    out.kkt_residual = std::fabs(projected);
    out.iterations = it;
    return out;
}

double stationarity(const AllocationProblem& problem, double power_c)
{
    const SplitTerms t = split_terms(problem, power_c);
    const Weights w = weights(problem);
    return w.rate * t.rate_dpc + w.distortion * t.distortion_dps;
}

double kkt_residual_check(const AllocationProblem& problem, double power_c)
{
    return std::fabs(stationarity(problem, power_c));
}

PowerSplit kkt_power_split(const AllocationProblem& problem)
{
    problem.validate();
    if (problem.mode != ObjectiveMode::weighted) {
        throw InvalidArgument("kkt_power_split: requires the weighted objective mode");
    }
    if (!(problem.weight > 0.0 && problem.weight < 1.0)) {
        throw InvalidArgument("kkt_power_split: weight must be in (0, 1)");
    }
    const double power = problem.power();
    const auto phi = [&](double pc) { return stationarity(problem, pc); };
    const double at_zero = phi(0.0);
    const double at_full = phi(power);

    PowerSplit out;
    if (at_zero > 0.0 && at_full < 0.0) {
        out.power_c = find_root(phi, 0.0, power, 1e-13 * std::max(1.0, power));
        out.interior = true;
    } else {
        const auto j_at = [&](double pc) { return value(problem, split_terms(problem, pc)); };
        out.power_c = j_at(power) >= j_at(0.0) ? power : 0.0;
    }
    out.power_s = power - out.power_c;
    out.residual = kkt_residual_check(problem, out.power_c);
    return out;
}

}  // namespace aiisac
