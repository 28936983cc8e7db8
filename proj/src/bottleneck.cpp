#include "aiisac/bottleneck.hpp"

#include "aiisac/errors.hpp"
#include "aiisac/numerics.hpp"

#include <cmath>
#include <numbers>

namespace aiisac {

AiBudget::AiBudget(double c_ai) : c_ai_(c_ai)
{
    if (std::isnan(c_ai) || c_ai < 0.0) {
        throw InvalidArgument("AiBudget: capacity must be in [0, inf]");
    }
}

namespace {

// 2^c - 1 without cancellation for small c.
double pow2m1(double c) { return std::expm1(c * std::numbers::ln2); }

void require_positive_budget(AiBudget budget, const char* who)
{
    if (budget.is_zero()) {
        throw DegenerateBudget(std::string(who) + ": zero AI budget has no finite equivalent noise");
    }
}

}  // namespace

double kappa(AiBudget budget)
{
    require_positive_budget(budget, "kappa");
    if (budget.is_unlimited()) {
        return 0.0;
    }
    return 1.0 / pow2m1(budget.bits());
}

double equivalent_noise(AiBudget budget, double power)
{
    if (!(power > 0.0) || std::isinf(power)) {
        throw InvalidArgument("equivalent_noise: power must be positive and finite");
    }
    return power * kappa(budget);
}

double enforce_mi_numerically(double power, double target_c_ai, double tol)
{
    if (!(power > 0.0) || std::isinf(power)) {
        throw InvalidArgument("enforce_mi_numerically: power must be positive and finite");
    }
    if (!(target_c_ai > 0.0) || std::isinf(target_c_ai)) {
        throw InvalidArgument("enforce_mi_numerically: target must be positive and finite");
    }
    if (!(tol > 0.0)) {
        throw InvalidArgument("enforce_mi_numerically: tolerance must be positive");
    }
    // Solve in u = ln(N_z / P): g(u) = log2(1 + e^{-u}) - C, decreasing in u.
    const auto g = [target_c_ai](double u) {
        const double mi = u > -30.0 ? std::log1p(std::exp(-u)) : -u + std::log1p(std::exp(u));
        return mi / std::numbers::ln2 - target_c_ai;
    };
    double lo = -1.0;
    double hi = 1.0;
    while (g(lo) < 0.0 && lo > -745.0) {
        lo *= 2.0;
    }
    while (g(hi) > 0.0 && hi < 745.0) {
        hi *= 2.0;
    }
    // |g'(u)| < 1/ln2, so a bracket of width tol*ln2/2 keeps |g| below tol.
    const double u = find_root(g, lo, hi, 0.5 * tol * std::numbers::ln2);
    return power * std::exp(u);
}

HermitianMatrix covariance_map(const HermitianMatrix& q, AiBudget budget)
{
    require_positive_budget(budget, "covariance_map");
    if (q.matrix().is_zero()) {
        throw DegenerateInput("covariance_map: Q is the zero matrix");
    }
    if (!q.is_psd()) {
        throw InvalidArgument("covariance_map: Q is not positive semidefinite");
    }
    const std::size_t n = q.dim();
    if (budget.is_unlimited()) {
        return HermitianMatrix::zero(n);
    }
    const auto active = active_subspace(q, kRankThreshold);
    const std::size_t r = active.values.size();
    if (r == 0) {
        throw DegenerateInput("covariance_map: Q has no active eigenvalues");
    }
    const double zeta = 1.0 / pow2m1(budget.bits() / static_cast<double>(r));
    std::vector<double> scaled(active.values);
    for (auto& v : scaled) {
        v *= zeta;
    }
    const CMatrix rz = active.basis * CMatrix::diagonal(scaled) * active.basis.adjoint();
    return HermitianMatrix(rz);
}

double gaussian_mi(const HermitianMatrix& q, const HermitianMatrix& r_z)
{
    if (q.dim() != r_z.dim()) {
        throw InvalidArgument("gaussian_mi: dimension mismatch");
    }
    if (q.matrix().is_zero()) {
        return 0.0;
    }
    const auto active = active_subspace(q, kRankThreshold);
    if (active.values.empty()) {
        return 0.0;
    }
    const CMatrix& u = active.basis;
    const CMatrix ur = u.adjoint() * r_z.matrix() * u;
    const CMatrix uq = CMatrix::diagonal(active.values);
    const double with_signal = log_det_hpd(ur + uq);
    const double noise_only = log_det_hpd(ur);
    return (with_signal - noise_only) / std::numbers::ln2;
}

}  // namespace aiisac
