#pragma once

#include "aiisac/bottleneck.hpp"

#include <span>

namespace aiisac {

/// Scalar Gaussian ISAC link. All quantities are linear scale.
struct ScalarScenario {
    double power = 1.0;      // P, watts
    double gain_c = 1.0;     // |h_c|^2
    double gain_s = 1.0;     // |h_s|^2
    double noise_c = 0.1;    // N_c, watts
    double noise_s = 0.1;    // N_s, watts
    double prior_var = 1.0;  // sigma_theta^2

    /// Throws InvalidArgument naming the first offending field.
    void validate() const;
};

struct PerfPoint {
    double rate = 0.0;        // bits per channel use
    double distortion = 0.0;  // squared parameter units
};

struct EffectiveSnrs {
    double comm = 0.0;
    double sensing = 0.0;
};

/// gain * power / (noise + gain * n_z). An infinite n_z gives 0.
double effective_snr(double gain, double power, double noise, double n_z);

/// Effective SNRs with N_z = equivalent_noise(budget, P). Throws DegenerateBudget for C = 0.
EffectiveSnrs effective_snrs(const ScalarScenario& sc, AiBudget budget);

/// log2(1 + snr_c); zero for C = 0.
double rate(const ScalarScenario& sc, AiBudget budget);

/// sigma^2 / (1 + snr_s); sigma^2 for C = 0.
double distortion(const ScalarScenario& sc, AiBudget budget);

PerfPoint performance(const ScalarScenario& sc, AiBudget budget);

/// MMSE distortion after I bits about the parameter: sigma^2 * 2^{-I}.
double info_to_distortion(double info_bits, double prior_var);

/// Least-squares slope of log2(R(inf) - R(C)) against C over an ascending grid of >= 4 finite budgets.
double scaling_gap(const ScalarScenario& sc, std::span<const double> c_grid);

/// sqrt(2 I / n_tr).
double gen_tradeoff_bound(double mi_bits, long long n_tr);

}  // namespace aiisac
