#include "aiisac/mimo_perf.hpp"

#include "aiisac/errors.hpp"

#include <cmath>
#include <numbers>

namespace aiisac {

void MimoScenario::validate() const
{
    const std::size_t n_t = q.dim();
    const std::size_t n_r = r_c.dim();
    if (n_t == 0 || n_r == 0) {
        throw InvalidArgument("MimoScenario: empty dimensions");
    }
    if (h_c.rows() != n_r || h_c.cols() != n_t) {
        throw InvalidArgument("MimoScenario: H_c must be N_r x N_t");
    }
    if (h_s.rows() != r_s.dim() || h_s.cols() != n_t) {
        throw InvalidArgument("MimoScenario: H_s must match R_s and Q");
    }
    if (dmu.size() != r_s.dim()) {
        throw InvalidArgument("MimoScenario: dmu must match R_s");
    }
    if (!q.is_psd()) {
        throw InvalidArgument("MimoScenario: Q is not positive semidefinite");
    }
    if (!(q.matrix().trace().real() <= power + 1e-9)) {
        throw InvalidArgument("MimoScenario: trace(Q) exceeds the power budget");
    }
}

HermitianMatrix effective_latent_noise(const MimoScenario& sc)
{
    if (sc.budget.is_unlimited() || sc.q.matrix().is_zero()) {
        return HermitianMatrix::zero(sc.q.dim());
    }
    return covariance_map(sc.q, sc.budget);
}

namespace {

CMatrix conjugate_by(const CMatrix& h, const CMatrix& m) { return h * m * h.adjoint(); }

}  // namespace

double mimo_rate(const MimoScenario& sc)
{
    sc.validate();
    if (sc.budget.is_zero() || sc.q.matrix().is_zero() || sc.h_c.is_zero()) {
        return 0.0;
    }
    const CMatrix s = sc.r_c.matrix() + conjugate_by(sc.h_c, effective_latent_noise(sc).matrix());
    const CMatrix signal = conjugate_by(sc.h_c, sc.q.matrix());
    return (log_det_hpd(s + signal) - log_det_hpd(s)) / std::numbers::ln2;
}

double mimo_rate_whitened(const MimoScenario& sc)
{
    sc.validate();
    if (sc.budget.is_zero() || sc.q.matrix().is_zero() || sc.h_c.is_zero()) {
        return 0.0;
    }
    const CMatrix s = sc.r_c.matrix() + conjugate_by(sc.h_c, effective_latent_noise(sc).matrix());
    const CMatrix l = cholesky(s);
    // W = L^{-1} H; W Q W^H = L^{-1} H Q H^H L^{-H}.
    const CMatrix w = forward_substitute(l, sc.h_c);
    const CMatrix m = CMatrix::identity(s.rows()) + conjugate_by(w, sc.q.matrix());
    return log_det_hpd(m) / std::numbers::ln2;
}

double fisher_info(const MimoScenario& sc)
{
    sc.validate();
    CMatrix s = sc.r_s.matrix();
    if (!sc.budget.is_zero()) {
        s += conjugate_by(sc.h_s, effective_latent_noise(sc).matrix());
    } else if (!sc.h_s.is_zero() && !sc.q.matrix().is_zero()) {
        // Unbounded latent noise along the sensing directions carries no information.
        return 0.0;
    }
    const CVector y = forward_substitute(cholesky(s), sc.dmu);
    double info = 0.0;
    for (const auto& v : y) {
        info += std::norm(v);
    }
    return info;
}

double crlb(const MimoScenario& sc)
{
    const double info = fisher_info(sc);
    if (!(info > 0.0)) {
        throw UnobservableParameter("crlb: Fisher information is zero");
    }
    return 1.0 / info;
}

std::vector<double> rate_surface(const MimoScenario& tmpl, const std::vector<double>& c_grid,
                                 const std::vector<double>& snr_grid_db)
{
    if (c_grid.empty() || snr_grid_db.empty()) {
        throw InvalidArgument("rate_surface: grids must be non-empty");
    }
    std::vector<double> out;
    out.reserve(c_grid.size() * snr_grid_db.size());
    for (double c : c_grid) {
        for (double snr_db : snr_grid_db) {
            const double scale = std::pow(10.0, snr_db / 10.0);
            MimoScenario sc = tmpl;
            sc.q = scale * tmpl.q;
            sc.power = scale * tmpl.power;
            sc.budget = AiBudget(c);
            out.push_back(mimo_rate(sc));
        }
    }
    return out;
}

MimoScenario isotropic_template(std::size_t n_t, std::size_t n_r, double noise)
{
    if (n_t == 0 || n_r == 0 || !(noise > 0.0)) {
        throw InvalidArgument("isotropic_template: need positive dimensions and noise");
    }
    CMatrix h(n_r, n_t);
    for (std::size_t i = 0; i < std::min(n_r, n_t); ++i) {
        h(i, i) = 1.0;
    }
    MimoScenario sc;
    sc.h_c = h;
    sc.h_s = h;
    sc.q = (noise / static_cast<double>(n_t)) * HermitianMatrix::identity(n_t);
    sc.r_c = noise * HermitianMatrix::identity(n_r);
    sc.r_s = noise * HermitianMatrix::identity(n_r);
    sc.dmu = CVector(n_r, Complex(1.0 / std::sqrt(static_cast<double>(n_r))));
    sc.power = noise;
    return sc;
}

}  // namespace aiisac
