#pragma once

#include "aiisac/allocate.hpp"
#include "aiisac/gaussian_perf.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace aiisac {

enum class Preset { tableI_dbm, tableI_normalized };

std::string preset_name(Preset preset);
Preset parse_preset(const std::string& name);

std::string mode_name(ObjectiveMode mode);
std::string coupling_name(NoiseCoupling coupling);
std::string time_split_name(TimeSplit split);

double db_to_linear(double db);
double linear_to_db(double linear);
double dbm_to_watts(double dbm);

/// Inclusive uniform grid lo, lo + step, ..., hi (hi reached within rounding).
std::vector<double> uniform_grid(double lo, double hi, double step);

/// Everything the commands consume, in linear units.
struct RunConfig {
    Preset preset = Preset::tableI_dbm;

    // scenario
    double power = 0.01;  // W
    double noise_c = 0.1;
    double noise_s = 0.1;
    double gain_c = 1.0;
    double gain_s = 1.0;
    double prior_var = 1.0;
    double carrier_ghz = 28.0;       // recorded only
    long long blocklength = 10000;   // recorded only
    int quadrature_order = 20;
    std::uint64_t seed = 20240601;

    // gaussian-sweep
    double sweep_c_min = 0.0;
    double sweep_c_max = 8.0;
    double sweep_c_step = 0.25;
    double rician_k = 3.9810717055349722;  // 6 dB

    // frontier
    std::vector<double> frontier_budgets{0.5, 2.0, 4.0, 6.0, std::numeric_limits<double>::infinity()};
    int frontier_points = 201;

    // mimo-surface
    int mimo_n_t = 2;
    int mimo_n_r = 2;
    double mimo_noise = 0.1;
    double mimo_c_min = 0.5;
    double mimo_c_max = 8.0;
    double mimo_c_step = 0.5;
    double mimo_snr_min_db = -5.0;
    double mimo_snr_max_db = 25.0;
    double mimo_snr_step_db = 1.0;

    // allocate
    double alloc_weight = 0.3;
    double alloc_alpha0 = 0.4;
    double alloc_c_ai = 4.0;
    int alloc_max_iter = 50;
    double alloc_tol = 1e-10;
    ObjectiveMode alloc_mode = ObjectiveMode::penalty;
    NoiseCoupling alloc_coupling = NoiseCoupling::total_power;
    TimeSplit alloc_time_split = TimeSplit::fixed_half;
    double alloc_comm_time_fraction = 0.5;

    // verify
    double verify_alpha = 0.6;
    std::uint64_t verify_mc_samples = 10000000;

    ScalarScenario scenario() const;
    AllocationProblem allocation_problem() const;

    /// Throws ConfigError naming the offending field.
    void validate() const;

    /// One-line description for CSV and report headers.
    std::string describe() const;
};

struct ConfigOverrides {
    std::optional<Preset> preset;
    std::optional<std::uint64_t> seed;
    std::optional<int> quadrature_order;
};

void apply_preset(RunConfig& cfg, Preset preset);

/// Parses INI-style text. `origin` prefixes diagnostics ("<origin>:<line>: ...").
RunConfig parse_config(const std::string& text, const std::string& origin, const ConfigOverrides& overrides = {});

/// Reads and parses a file; an empty path gives the defaults with overrides applied.
RunConfig load_config(const std::string& path, const ConfigOverrides& overrides = {});

}  // namespace aiisac
