#pragma once

#include "aiisac/linalg.hpp"

#include <limits>

namespace aiisac {

/// AI representational capacity in bits per channel use, in [0, inf].
/// Infinity is the classical (unconstrained) limit.
class AiBudget {
public:
    explicit AiBudget(double c_ai);
    static AiBudget unlimited() { return AiBudget(std::numeric_limits<double>::infinity()); }

    double bits() const { return c_ai_; }
    bool is_unlimited() const { return c_ai_ == std::numeric_limits<double>::infinity(); }
    bool is_zero() const { return c_ai_ == 0.0; }

private:
    double c_ai_;
};

/// kappa = N_z / P = 1 / (2^C - 1). Zero for an unlimited budget.
double kappa(AiBudget budget);

/// N_z = P / (2^C - 1). Throws DegenerateBudget for C = 0.
double equivalent_noise(AiBudget budget, double power);

/// N_z solving log2(1 + P/N_z) = C by root finding, |residual| <= tol bits.
double enforce_mi_numerically(double power, double target_c_ai, double tol);

inline constexpr double kRankThreshold = 1e-12;

/// Minimum-trace latent noise covariance R_z = zeta Q on the active subspace of Q,
/// zeta = 1 / (2^{C/r} - 1). Zero on the null space of Q and zero for C = inf.
HermitianMatrix covariance_map(const HermitianMatrix& q, AiBudget budget);

/// log2 det(I + R_z^{-1} Q) evaluated on the active subspace of Q.
double gaussian_mi(const HermitianMatrix& q, const HermitianMatrix& r_z);

}  // namespace aiisac
