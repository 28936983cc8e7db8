#pragma once

#include "aiisac/bottleneck.hpp"
#include "aiisac/linalg.hpp"

#include <vector>

namespace aiisac {

struct MimoScenario {
    CMatrix h_c;          // N_r x N_t
    CMatrix h_s;          // N_r x N_t
    HermitianMatrix q;    // N_t x N_t transmit covariance
    HermitianMatrix r_c;  // N_r x N_r, positive definite
    HermitianMatrix r_s;  // N_r x N_r, positive definite
    CVector dmu;          // derivative of the sensing mean with respect to theta
    AiBudget budget{AiBudget::unlimited()};
    double power = 0.0;   // trace(Q) <= power + 1e-9

    /// Throws InvalidArgument on inconsistent dimensions or a trace above the power budget.
    void validate() const;
};

/// Latent noise covariance for the scenario (zero for an unlimited budget).
HermitianMatrix effective_latent_noise(const MimoScenario& sc);

/// log2 det(S + H Q H^H) - log2 det(S), S = R_c + H R_z H^H, via Cholesky.
double mimo_rate(const MimoScenario& sc);

/// Same quantity as log2 det(I + L^{-1} H Q H^H L^{-H}) with S = L L^H.
double mimo_rate_whitened(const MimoScenario& sc);

/// dmu^H (R_s + H_s R_z H_s^H)^{-1} dmu.
double fisher_info(const MimoScenario& sc);

/// 1 / fisher_info. Throws UnobservableParameter when the information is zero.
double crlb(const MimoScenario& sc);

/// Rates on the grid (c_grid x snr_grid_db), row-major. Q and the power budget of the
/// template are scaled by 10^{snr/10}.
std::vector<double> rate_surface(const MimoScenario& tmpl, const std::vector<double>& c_grid,
                                 const std::vector<double>& snr_grid_db);

/// Identity channels, noise * I covariances and isotropic Q = (noise / N_t) I,
/// so the template sits at 0 dB transmit SNR tr(Q) / noise.
MimoScenario isotropic_template(std::size_t n_t, std::size_t n_r, double noise);

}  // namespace aiisac
