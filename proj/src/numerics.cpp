#include "aiisac/numerics.hpp"

#include "aiisac/errors.hpp"

#include <boost/math/tools/toms748_solve.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace aiisac {

namespace {

// Returns (L_n(z), L_{n-1}(z)) via the three-term recurrence.
std::pair<long double, long double> laguerre_pair(int n, long double z)
{
    long double p1 = 1.0L;
    long double p2 = 0.0L;
    for (int j = 1; j <= n; ++j) {
        const long double p3 = p2;
        p2 = p1;
        p1 = ((2.0L * j - 1.0L - z) * p2 - (j - 1.0L) * p3) / j;
    }
    return {p1, p2};
}

}  // namespace

QuadratureRule gauss_laguerre(int order)
{
    if (order < 1 || order > kMaxQuadratureOrder) {
        throw InvalidArgument("gauss_laguerre: order must be in [1, 128], got " + std::to_string(order));
    }
    const int n = order;
    std::vector<long double> x(n);
    std::vector<long double> w(n);
    constexpr int kMaxNewton = 100;
    // Newton stalls at a few ulps of long double; that is far below double resolution.
    constexpr long double kTight = 1e-17L;
    constexpr long double kLoose = 1e-14L;

    long double z = 0.0L;
    for (int i = 0; i < n; ++i) {
        // Standard asymptotic starting points (Stroud & Secrest).
        if (i == 0) {
            z = 3.0L / (1.0L + 2.4L * n);
        } else if (i == 1) {
            z += 15.0L / (1.0L + 2.5L * n);
        } else {
            const long double ai = i - 1;
            z += ((1.0L + 2.55L * ai) / (1.9L * ai)) * (z - x[i - 2]);
        }
        long double step = 0.0L;
        for (int it = 0; it < kMaxNewton; ++it) {
            const auto [pn, pn1] = laguerre_pair(n, z);
            step = pn / (n * (pn - pn1) / z);
            z -= step;
            if (std::fabs(step) <= kTight * z) {
                break;
            }
        }
        if (!(std::fabs(step) <= kLoose * z)) {
            throw std::runtime_error("gauss_laguerre: Newton iteration failed for node " + std::to_string(i));
        }
        const long double pn1 = laguerre_pair(n, z).second;
        x[i] = z;
        w[i] = z / (static_cast<long double>(n) * n * pn1 * pn1);
    }

    QuadratureRule rule;
    rule.nodes.reserve(n);
    rule.weights.reserve(n);
    for (int i = 0; i < n; ++i) {
        if (i > 0 && !(x[i] > x[i - 1])) {
            throw std::runtime_error("gauss_laguerre: nodes not strictly ascending at order " + std::to_string(n));
        }
        rule.nodes.push_back(static_cast<double>(x[i]));
        rule.weights.push_back(static_cast<double>(w[i]));
    }
    return rule;
}

double lambert_w0(double x)
{
    constexpr double kInvE = 0.36787944117144232159552377016146087;
    if (std::isnan(x) || x < -kInvE) {
        // Allow the last representable step below -1/e to land on the branch point.
        if (x >= -kInvE * (1.0 + 4.0 * std::numeric_limits<double>::epsilon())) {
            return -1.0;
        }
        throw DomainError("lambert_w0: argument below -1/e");
    }
    if (x == 0.0) {
        return 0.0;
    }
    if (std::isinf(x)) {
        return x;
    }

    if (x > std::numbers::e) {
        // Newton on w + ln w = ln x avoids overflow in w e^w.
        const double lx = std::log(x);
        const double llx = std::log(lx);
        double w = lx - llx + llx / lx;
        for (int it = 0; it < 50; ++it) {
            const double step = (w + std::log(w) - lx) / (1.0 + 1.0 / w);
            w -= step;
            if (std::fabs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * w) {
                break;
            }
        }
        return w;
    }

    double w = 0.0;
    if (x < -0.25) {
        const double p = std::sqrt(2.0 * (std::numbers::e * x + 1.0));
        w = -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
    } else {
        w = std::log1p(x);
    }
    for (int it = 0; it < 50; ++it) {
        const double ew = std::exp(w);
        const double f = w * ew - x;
        if (f == 0.0 || w == -1.0) {
            break;
        }
        const double wp1 = w + 1.0;
        const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
        w -= step;
        if (std::fabs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::fabs(w))) {
            break;
        }
    }
    return w;
}

double log_bessel_i0(double x)
{
    if (std::isnan(x) || x < 0.0) {
        throw DomainError("log_bessel_i0: argument must be non-negative");
    }
    if (x < kBesselSwitchPoint) {
        // sum_k ((x/2)^2)^k / (k!)^2
        const double q = 0.25 * x * x;
        double term = 1.0;
        double sum = 1.0;
        for (int k = 1; k < 200; ++k) {
            term *= q / (static_cast<double>(k) * k);
            sum += term;
            if (term < 1e-17 * sum) {
                break;
            }
        }
        return std::log(sum);
    }
    // I0(x) ~ e^x / sqrt(2 pi x) * sum_k ((2k-1)!!)^2 / (k! (8x)^k)
    const double inv8x = 1.0 / (8.0 * x);
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 60; ++k) {
        const double next = term * (2.0 * k - 1.0) * (2.0 * k - 1.0) * inv8x / k;
        if (next > term) {
            break;  // asymptotic series starts diverging
        }
        term = next;
        sum += term;
        if (term < 1e-17 * sum) {
            break;
        }
    }
    return x - 0.5 * std::log(2.0 * std::numbers::pi * x) + std::log(sum);
}

double find_root(const std::function<double(double)>& f, double lo, double hi, double tol)
{
    if (!(lo < hi)) {
        throw InvalidArgument("find_root: require lo < hi");
    }
    if (!(tol > 0.0)) {
        throw InvalidArgument("find_root: tolerance must be positive");
    }
    const double flo = f(lo);
    const double fhi = f(hi);
    if (std::isnan(flo) || std::isnan(fhi)) {
        throw BracketError("find_root: function is NaN at a bracket end");
    }
    if (std::fabs(flo) <= tol) {
        return lo;
    }
    if (std::fabs(fhi) <= tol) {
        return hi;
    }
    if ((flo > 0.0) == (fhi > 0.0)) {
        throw BracketError("find_root: no sign change in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }

    // Values within tol of zero are treated as exact roots so TOMS 748 stops on them.
    const auto clipped = [&](double x) {
        const double v = f(x);
        return std::fabs(v) <= tol ? 0.0 : v;
    };
    const auto done = [tol](double a, double b) {
        return std::fabs(b - a) <= tol ||
               std::fabs(b - a) <= 4.0 * std::numeric_limits<double>::epsilon() * std::fabs(a);
    };
    boost::uintmax_t iterations = 500;
    const auto [a, b] = boost::math::tools::toms748_solve(clipped, lo, hi, flo, fhi, done, iterations);
    if (a == b) {
        return a;
    }
    const double mid = a + 0.5 * (b - a);
    if (!done(a, b) && std::fabs(f(mid)) > tol) {
        throw BracketError("find_root: iteration limit reached before tolerance");
    }
    return mid;
}

std::array<std::uint32_t, 4> RandomStream::block(std::uint64_t counter) const
{
    constexpr std::uint32_t kM0 = 0xD2511F53u;
    constexpr std::uint32_t kM1 = 0xCD9E8D57u;
    constexpr std::uint32_t kW0 = 0x9E3779B9u;
    constexpr std::uint32_t kW1 = 0xBB67AE85u;

    std::array<std::uint32_t, 4> ctr = {
        static_cast<std::uint32_t>(counter),
        static_cast<std::uint32_t>(counter >> 32),
        static_cast<std::uint32_t>(stream_),
        static_cast<std::uint32_t>(stream_ >> 32),
    };
    std::array<std::uint32_t, 2> key = {static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32)};
    for (int round = 0; round < 10; ++round) {
        const std::uint64_t p0 = static_cast<std::uint64_t>(kM0) * ctr[0];
        const std::uint64_t p1 = static_cast<std::uint64_t>(kM1) * ctr[2];
        ctr = {
            static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
            static_cast<std::uint32_t>(p1),
            static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
            static_cast<std::uint32_t>(p0),
        };
        key[0] += kW0;
        key[1] += kW1;
    }
    return ctr;
}

double to_unit_open(std::uint64_t bits)
{
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

std::array<double, 2> RandomStream::uniform_pair(std::uint64_t counter) const
{
    const auto b = block(counter);
    const std::uint64_t u0 = (static_cast<std::uint64_t>(b[1]) << 32) | b[0];
    const std::uint64_t u1 = (static_cast<std::uint64_t>(b[3]) << 32) | b[2];
    return {to_unit_open(u0), to_unit_open(u1)};
}

std::uint64_t RandomStream::next_u64()
{
    const auto b = block(position_ >> 1);
    const std::size_t half = (position_ & 1u) * 2;
    ++position_;
    return (static_cast<std::uint64_t>(b[half + 1]) << 32) | b[half];
}

double RandomStream::next_uniform() { return to_unit_open(next_u64()); }

}  // namespace aiisac
