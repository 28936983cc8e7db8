#pragma once

#include "aiisac/gaussian_perf.hpp"

#include <vector>

namespace aiisac {

struct FrontierPoint {
    double alpha = 0.0;
    double rate = 0.0;
    double distortion = 0.0;
};

struct Frontier {
    AiBudget budget{AiBudget::unlimited()};
    std::vector<FrontierPoint> points;  // ascending alpha
};

inline constexpr int kDefaultFrontierPoints = 201;
inline constexpr int kRegionGridPoints = 2001;

/// Joint design at power split alpha: communication on alpha P, sensing on (1 - alpha) P,
/// both degraded by the latent noise N_z = P / (2^C - 1) of the total power.
PerfPoint split_performance(const ScalarScenario& sc, AiBudget budget, double alpha);

/// Time-sharing baseline at fraction tau: rate tau R(P), sensing SNR scaled by 1 - tau.
PerfPoint separated_performance(const ScalarScenario& sc, AiBudget budget, double tau);

Frontier frontier(const ScalarScenario& sc, AiBudget budget, int n_points = kDefaultFrontierPoints);
Frontier separated_baseline(const ScalarScenario& sc, AiBudget budget, int n_points = kDefaultFrontierPoints);

struct RegionVerdict {
    bool inside = false;
    double alpha = 0.0;  // best split found
    double slack = 0.0;  // min(rate margin, distortion margin / sigma^2) at that split
};

/// Membership of a (rate, distortion) target by search over a uniform alpha grid.
RegionVerdict in_region(const ScalarScenario& sc, AiBudget budget, PerfPoint candidate,
                        int grid_points = kRegionGridPoints);

/// Fraction of baseline points whose rate the joint frontier meets or beats at the same distortion.
double dominance_fraction(const Frontier& joint, const Frontier& baseline);

struct FrontierGap {
    double rate = 0.0;
    double distortion = 0.0;
};

/// Largest pointwise differences between two frontiers sampled on the same alpha grid.
FrontierGap sup_distance(const Frontier& a, const Frontier& b);

}  // namespace aiisac
