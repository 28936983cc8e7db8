#pragma once

#include "aiisac/allocate.hpp"
#include "aiisac/config.hpp"
#include "aiisac/mimo_perf.hpp"

#include <string>

namespace aiisac {

/// Doubles as CSV text: 17 significant digits, "inf" for infinity.
std::string format_number(double v);

/// Columns c_ai, rate_awgn, rate_rayleigh, rate_rician, dist_awgn, dist_rayleigh, dist_rician.
std::string gaussian_sweep_csv(const RunConfig& cfg);

/// Columns c_ai, alpha, rate, distortion, baseline_rate, baseline_distortion, one block per budget.
std::string frontier_csv(const RunConfig& cfg);

/// Columns c_ai, snr_db, rate, row-major over (c_ai, snr).
std::string mimo_surface_csv(const RunConfig& cfg);

/// Isotropic template for the MIMO surface command.
MimoScenario mimo_template(const RunConfig& cfg);

struct AllocateOutput {
    std::string csv;
    AllocationResult result;
};

/// Columns iteration, alpha, objective, achieved_mi, then a "# summary" line.
AllocateOutput allocate_csv(const RunConfig& cfg);

}  // namespace aiisac
