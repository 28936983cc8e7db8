#pragma once

#include "aiisac/numerics.hpp"

#include <cstdint>

namespace aiisac {

enum class FadingKind { awgn, rayleigh, rician };

/// Distribution of the channel power gain x = |h|^2.
struct FadingModel {
    FadingKind kind = FadingKind::rayleigh;
    double gain = 1.0;      // awgn only
    double k_factor = 0.0;  // rician only; unit scattered power, mean gain 1 + K

    static FadingModel awgn(double gain);
    static FadingModel rayleigh() { return {}; }
    static FadingModel rician(double k_factor);

    double mean_gain() const;
};

/// x g / (1 + x g kappa). An infinite kappa (zero budget) gives 0.
double conditional_snr(double x, double mean_snr, double kappa);

double ergodic_rate_rayleigh(double mean_snr, double kappa, const QuadratureRule& rule);
double ergodic_distortion_rayleigh(double mean_snr, double kappa, double prior_var, const QuadratureRule& rule);

/// Exact Rician averages with e^{-K} I0(2 sqrt(K x)) folded into the Laguerre integrand.
double ergodic_rate_rician(double mean_snr, double kappa, double k_factor, const QuadratureRule& rule);
double ergodic_distortion_rician(double mean_snr, double kappa, double k_factor, double prior_var,
                                 const QuadratureRule& rule);

/// Dispatch on the model; awgn is evaluated in closed form at its fixed gain.
double ergodic_rate(const FadingModel& model, double mean_snr, double kappa, const QuadratureRule& rule);
double ergodic_distortion(const FadingModel& model, double mean_snr, double kappa, double prior_var,
                          const QuadratureRule& rule);

/// log2(1 + (1+K) g / (1 + (1+K) g kappa)).
double rician_moment_matched(double mean_snr, double kappa, double k_factor);

/// log2(1 + E[snr]) with the expectation taken by quadrature against the model density.
double jensen_upper_bound(const FadingModel& model, double mean_snr, double kappa, const QuadratureRule& rule);

struct MonteCarloEstimate {
    double rate = 0.0;
    double distortion = 0.0;
    double rate_stderr = 0.0;
    double distortion_stderr = 0.0;
    std::uint64_t samples = 0;
};

inline constexpr std::uint64_t kMonteCarloChunk = 1u << 16;

/// Sample averages over gains drawn from the model. Sample i uses block i of `stream`,
/// chunks are reduced in index order, so the result does not depend on thread count.
MonteCarloEstimate monte_carlo_oracle(const FadingModel& model, double mean_snr, double kappa, double prior_var,
                                      std::uint64_t n_samples, const RandomStream& stream,
                                      unsigned threads = 0);

}  // namespace aiisac
