#pragma once

#include "aiisac/config.hpp"

#include <string>
#include <vector>

namespace aiisac {

struct Check {
    std::string name;
    double observed = 0.0;
    std::string criterion;  // e.g. "<= 1e-09" or "in [-1.15, -0.85]"
    bool passed = false;
};

struct VerifyReport {
    std::string preamble;
    std::vector<Check> checks;

    bool all_passed() const;
    std::size_t failures() const;

    /// Deterministic text: one line per check plus a summary line.
    std::string text() const;
};

/// Runs the property suite and the theory-vs-achieved comparison on the given configuration.
VerifyReport run_verify(const RunConfig& cfg);

}  // namespace aiisac
