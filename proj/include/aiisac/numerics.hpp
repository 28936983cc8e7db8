#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

namespace aiisac {

/// Gauss-Laguerre rule for the weight e^{-x} on (0, inf).
///
/// Nodes are strictly ascending and positive; weights are positive and sum to one.
/// The rule integrates x^k e^{-x} exactly (= k!) for k <= 2M-1.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t order() const { return nodes.size(); }
};

inline constexpr int kMaxQuadratureOrder = 128;
inline constexpr int kDefaultQuadratureOrder = 20;

/// Order-M rule, 1 <= M <= 128. Nodes by Newton iteration on the Laguerre
/// three-term recurrence (carried in long double), weights from
/// w = x / (M^2 L_{M-1}(x)^2).
QuadratureRule gauss_laguerre(int order);

/// Principal branch W0 of the Lambert W function, x >= -1/e.
double lambert_w0(double x);

/// ln I0(x) for x >= 0. Power series below 20, large-argument expansion above.
double log_bessel_i0(double x);

inline constexpr double kBesselSwitchPoint = 20.0;

/// Root of f in [lo, hi] with |f(x)| <= tol or final bracket width <= tol.
/// Requires f(lo) * f(hi) <= 0; throws BracketError otherwise.
double find_root(const std::function<double(double)>& f, double lo, double hi, double tol);

/// Compensated summation.
class KahanSum {
public:
    void add(double value)
    {
        const double y = value - carry_;
        const double t = sum_ + y;
        carry_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

/// Counter-based random source (Philox4x32-10).
///
/// Output i is a pure function of (seed, stream, i), so any sample can be
/// regenerated independently of how work is split across threads.
class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

    /// One Philox block for the 64-bit block counter.
    std::array<std::uint32_t, 4> block(std::uint64_t counter) const;

    /// Two independent uniforms in (0, 1) drawn from block `counter`.
    std::array<double, 2> uniform_pair(std::uint64_t counter) const;

    /// Sequential interface over 64-bit outputs.
    std::uint64_t next_u64();
    double next_uniform();
    void seek(std::uint64_t position) { position_ = position; }
    std::uint64_t position() const { return position_; }

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t position_ = 0;
};

/// Maps 64 random bits to a double in the open interval (0, 1).
double to_unit_open(std::uint64_t bits);

}  // namespace aiisac
