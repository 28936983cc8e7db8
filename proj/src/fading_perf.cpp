#include "aiisac/fading_perf.hpp"

#include "aiisac/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>
#include <vector>

namespace aiisac {

FadingModel FadingModel::awgn(double gain)
{
    if (!std::isfinite(gain) || gain < 0.0) {
        throw InvalidArgument("FadingModel: awgn gain must be non-negative");
    }
    return {FadingKind::awgn, gain, 0.0};
}

FadingModel FadingModel::rician(double k_factor)
{
    if (!std::isfinite(k_factor) || k_factor < 0.0) {
        throw InvalidArgument("FadingModel: Rician K must be non-negative");
    }
    return {FadingKind::rician, 1.0, k_factor};
}

double FadingModel::mean_gain() const
{
    switch (kind) {
    case FadingKind::awgn:
        return gain;
    case FadingKind::rayleigh:
        return 1.0;
    case FadingKind::rician:
        return 1.0 + k_factor;
    }
    return 0.0;
}

namespace {

void check_args(double mean_snr, double kappa)
{
    if (!(mean_snr > 0.0) || std::isinf(mean_snr)) {
        throw InvalidArgument("fading: mean SNR must be positive and finite");
    }
    if (std::isnan(kappa) || kappa < 0.0) {
        throw InvalidArgument("fading: kappa must be non-negative");
    }
}

void check_k(double k_factor)
{
    if (!std::isfinite(k_factor) || k_factor < 0.0) {
        throw InvalidArgument("fading: Rician K must be non-negative");
    }
}

// e^{-K} I0(2 sqrt(K x)), the Rician density divided by e^{-x}.
double rician_factor(double x, double k_factor)
{
    return std::exp(-k_factor + log_bessel_i0(2.0 * std::sqrt(k_factor * x)));
}

template <typename F>
double laguerre_sum(const QuadratureRule& rule, F&& integrand)
{
    double sum = 0.0;
    for (std::size_t m = 0; m < rule.order(); ++m) {
        sum += rule.weights[m] * integrand(rule.nodes[m]);
    }
    return sum;
}

}  // namespace

double conditional_snr(double x, double mean_snr, double kappa)
{
    if (std::isinf(kappa)) {
        return 0.0;
    }
    const double g = x * mean_snr;
    return g / (1.0 + g * kappa);
}

double ergodic_rate_rayleigh(double mean_snr, double kappa, const QuadratureRule& rule)
{
    check_args(mean_snr, kappa);
    return laguerre_sum(rule, [&](double x) { return std::log1p(conditional_snr(x, mean_snr, kappa)); }) /
           std::numbers::ln2;
}

double ergodic_distortion_rayleigh(double mean_snr, double kappa, double prior_var, const QuadratureRule& rule)
{
    check_args(mean_snr, kappa);
    if (std::isinf(kappa) || mean_snr == 0.0) {
        return prior_var;
    }
    return laguerre_sum(rule, [&](double x) { return prior_var / (1.0 + conditional_snr(x, mean_snr, kappa)); });
}

double ergodic_rate_rician(double mean_snr, double kappa, double k_factor, const QuadratureRule& rule)
{
    check_args(mean_snr, kappa);
    check_k(k_factor);
    return laguerre_sum(rule,
                        [&](double x) {
                            return rician_factor(x, k_factor) * std::log1p(conditional_snr(x, mean_snr, kappa));
                        }) /
           std::numbers::ln2;
}

double ergodic_distortion_rician(double mean_snr, double kappa, double k_factor, double prior_var,
                                 const QuadratureRule& rule)
{
    check_args(mean_snr, kappa);
    check_k(k_factor);
    if (std::isinf(kappa) || mean_snr == 0.0) {
        return prior_var;
    }
    return laguerre_sum(rule, [&](double x) {
        return rician_factor(x, k_factor) * prior_var / (1.0 + conditional_snr(x, mean_snr, kappa));
    });
}

double ergodic_rate(const FadingModel& model, double mean_snr, double kappa, const QuadratureRule& rule)
{
    switch (model.kind) {
    case FadingKind::awgn:
        check_args(mean_snr, kappa);
        return std::log2(1.0 + conditional_snr(model.gain, mean_snr, kappa));
    case FadingKind::rayleigh:
        return ergodic_rate_rayleigh(mean_snr, kappa, rule);
    case FadingKind::rician:
        return ergodic_rate_rician(mean_snr, kappa, model.k_factor, rule);
    }
    return 0.0;
}

double ergodic_distortion(const FadingModel& model, double mean_snr, double kappa, double prior_var,
                          const QuadratureRule& rule)
{
    switch (model.kind) {
    case FadingKind::awgn:
        check_args(mean_snr, kappa);
        return prior_var / (1.0 + conditional_snr(model.gain, mean_snr, kappa));
    case FadingKind::rayleigh:
        return ergodic_distortion_rayleigh(mean_snr, kappa, prior_var, rule);
    case FadingKind::rician:
        return ergodic_distortion_rician(mean_snr, kappa, model.k_factor, prior_var, rule);
    }
    return 0.0;
}

double rician_moment_matched(double mean_snr, double kappa, double k_factor)
{
    check_args(mean_snr, kappa);
    check_k(k_factor);
    return std::log2(1.0 + conditional_snr(1.0 + k_factor, mean_snr, kappa));
}

double jensen_upper_bound(const FadingModel& model, double mean_snr, double kappa, const QuadratureRule& rule)
{
    check_args(mean_snr, kappa);
    double mean = 0.0;
    switch (model.kind) {
    case FadingKind::awgn:
        mean = conditional_snr(model.gain, mean_snr, kappa);
        break;
    case FadingKind::rayleigh:
        mean = laguerre_sum(rule, [&](double x) { return conditional_snr(x, mean_snr, kappa); });
        break;
    case FadingKind::rician:
        check_k(model.k_factor);
        mean = laguerre_sum(rule, [&](double x) {
            return rician_factor(x, model.k_factor) * conditional_snr(x, mean_snr, kappa);
        });
        break;
    }
    return std::log2(1.0 + mean);
}

namespace {

struct ChunkSums {
    double rate = 0.0;
    double rate_sq = 0.0;
    double dist = 0.0;
    double dist_sq = 0.0;
};

double draw_gain(const FadingModel& model, const RandomStream& stream, std::uint64_t index)
{
    const auto u = stream.uniform_pair(index);
    if (model.kind == FadingKind::rayleigh) {
        return -std::log(u[0]);
    }
    // h = sqrt(K) + CN(0, 1) by Box-Muller.
    const double r = std::sqrt(-std::log(u[0]));
    const double phase = 2.0 * std::numbers::pi * u[1];
    const double re = std::sqrt(model.k_factor) + r * std::cos(phase);
    const double im = r * std::sin(phase);
    return re * re + im * im;
}

ChunkSums run_chunk(const FadingModel& model, double mean_snr, double kappa, double prior_var,
                    const RandomStream& stream, std::uint64_t begin, std::uint64_t end)
{
    KahanSum rate;
    KahanSum rate_sq;
    KahanSum dist;
    KahanSum dist_sq;
    for (std::uint64_t i = begin; i < end; ++i) {
        const double snr = conditional_snr(draw_gain(model, stream, i), mean_snr, kappa);
        const double r = std::log1p(snr) / std::numbers::ln2;
        const double d = prior_var / (1.0 + snr);
        rate.add(r);
        rate_sq.add(r * r);
        dist.add(d);
        dist_sq.add(d * d);
    }
    return {rate.value(), rate_sq.value(), dist.value(), dist_sq.value()};
}

}  // namespace

MonteCarloEstimate monte_carlo_oracle(const FadingModel& model, double mean_snr, double kappa, double prior_var,
                                      std::uint64_t n_samples, const RandomStream& stream, unsigned threads)
{
    check_args(mean_snr, kappa);
    if (n_samples < 1) {
        throw InvalidArgument("monte_carlo_oracle: need at least one sample");
    }
    if (!(prior_var > 0.0)) {
        throw InvalidArgument("monte_carlo_oracle: prior variance must be positive");
    }
    MonteCarloEstimate out;
    out.samples = n_samples;
    if (model.kind == FadingKind::awgn) {
        const double snr = conditional_snr(model.gain, mean_snr, kappa);
        out.rate = std::log2(1.0 + snr);
        out.distortion = prior_var / (1.0 + snr);
        return out;
    }
    if (model.kind == FadingKind::rician) {
        check_k(model.k_factor);
    }

    const std::uint64_t n_chunks = (n_samples + kMonteCarloChunk - 1) / kMonteCarloChunk;
    std::vector<ChunkSums> chunks(n_chunks);
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, n_chunks));
    const auto worker = [&](unsigned t) {
        for (std::uint64_t c = t; c < n_chunks; c += threads) {
            const std::uint64_t begin = c * kMonteCarloChunk;
            const std::uint64_t end = std::min(n_samples, begin + kMonteCarloChunk);
            chunks[c] = run_chunk(model, mean_snr, kappa, prior_var, stream, begin, end);
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker, t);
        }
    }

    KahanSum rate;
    KahanSum rate_sq;
    KahanSum dist;
    KahanSum dist_sq;
    for (const auto& c : chunks) {
        rate.add(c.rate);
        rate_sq.add(c.rate_sq);
        dist.add(c.dist);
        dist_sq.add(c.dist_sq);
    }
    const double n = static_cast<double>(n_samples);
    out.rate = rate.value() / n;
    out.distortion = dist.value() / n;
    if (n_samples > 1) {
        const double var_r = std::max(0.0, (rate_sq.value() - n * out.rate * out.rate) / (n - 1.0));
        const double var_d = std::max(0.0, (dist_sq.value() - n * out.distortion * out.distortion) / (n - 1.0));
        out.rate_stderr = std::sqrt(var_r / n);
        out.distortion_stderr = std::sqrt(var_d / n);
    }
    return out;
}

}  // namespace aiisac
