#pragma once

#include "aiisac/gaussian_perf.hpp"

#include <vector>

namespace aiisac {

/// penalty: J = R - lambda D.  weighted: J = lambda R - (1 - lambda) D.
enum class ObjectiveMode { penalty, weighted };

/// total_power: N_z = kappa P for both paths, constant under the split.
/// per_task: each path sees N_z = kappa P_i, i.e. snr = g / (1 + g kappa) with g = a P_i / N_i.
enum class NoiseCoupling { total_power, per_task };

/// fixed_half: T_c = T_s = T / 2, power only.  energy: rate weighted by T_c / T,
/// sensing SNR weighted by T_s / T.
enum class TimeSplit { fixed_half, energy };

struct AllocationProblem {
    ScalarScenario scenario;  // scenario.power is the total power P
    AiBudget budget{AiBudget::unlimited()};
    double weight = 0.0;  // lambda
    double total_time = 1.0;
    double comm_time_fraction = 0.5;  // T_c / T, energy mode only
    ObjectiveMode mode = ObjectiveMode::penalty;
    NoiseCoupling coupling = NoiseCoupling::total_power;
    TimeSplit time_split = TimeSplit::fixed_half;

    double power() const { return scenario.power; }
    void validate() const;
};

struct TraceEntry {
    int iteration = 0;
    double alpha = 0.0;
    double objective = 0.0;
    double achieved_mi = 0.0;
};

struct AllocationResult {
    double alpha_star = 0.0;
    double power_c = 0.0;
    double power_s = 0.0;
    double objective = 0.0;
    double kkt_residual = 0.0;  // projected gradient in alpha at the final iterate
    int iterations = 0;
    bool converged = false;
    std::vector<TraceEntry> trace;
};

/// Rate, distortion and their analytic derivatives at a power split.
struct SplitTerms {
    double rate = 0.0;
    double distortion = 0.0;
    double rate_dpc = 0.0;        // dR / dP_c
    double distortion_dps = 0.0;  // dD / dP_s
};

SplitTerms split_terms(const AllocationProblem& problem, double power_c);

double objective(const AllocationProblem& problem, double alpha);

AllocationResult optimize_alpha(const AllocationProblem& problem, double alpha0, int max_iter, double tol);

struct PowerSplit {
    double power_c = 0.0;
    double power_s = 0.0;
    double residual = 0.0;
    bool interior = false;
};

/// Stationary split of the weighted objective by root finding on P_c in (0, P).
PowerSplit kkt_power_split(const AllocationProblem& problem);

/// Signed stationarity w_R dR/dP_c + w_D dD/dP_s; positive means more communication power helps.
double stationarity(const AllocationProblem& problem, double power_c);

/// |stationarity(problem, power_c)|.
double kkt_residual_check(const AllocationProblem& problem, double power_c);

}  // namespace aiisac
