#pragma once

// Stable laws in the S1 parameterisation with zero location: sampling by the
// Chambers-Mallows-Stuck transform, CDF by Nolan's single-integral form.

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "../rng.hpp"

namespace maxss::detail {

inline double stable_standard_draw(double alpha, double beta, Rng& rng)
{
    constexpr double half_pi = std::numbers::pi / 2.0;
    const double v = std::numbers::pi * (rng.uniform() - 0.5);
    const double w = rng.exponential();
    if (alpha == 1.0) {
        const double a = half_pi + beta * v;
        return (a * std::tan(v) - beta * std::log(half_pi * w * std::cos(v) / a)) / half_pi;
    }
    const double t = beta * std::tan(half_pi * alpha);
    const double b = std::atan(t) / alpha;
    const double s = std::pow(1.0 + t * t, 1.0 / (2.0 * alpha));
    return s * std::sin(alpha * (v + b)) / std::pow(std::cos(v), 1.0 / alpha) *
           std::pow(std::cos(v - alpha * (v + b)) / w, (1.0 - alpha) / alpha);
}

inline double stable_draw(double alpha, double beta, double scale, Rng& rng)
{
    const double x = stable_standard_draw(alpha, beta, rng);
    if (alpha == 1.0) {
        return scale * x + 2.0 / std::numbers::pi * beta * scale * std::log(scale);
    }
    return scale * x;
}

// Integrates exp(-g) over [lo, hi] for monotone g. Far in the tails exp(-g)
// drops from 1 to 0 over a tiny part of the interval, so the range is cut at
// the points where g crosses a ladder of levels and the part with g > 50
// (weight below e^-50) is dropped.
template <class G>
double integrate_exp_neg(G g, double lo, double hi)
{
    using boost::math::quadrature::gauss_kronrod;
    auto f = [&](double th) {
        const double v = g(th);
        return std::isfinite(v) ? std::exp(-v) : (v > 0 ? 0.0 : 1.0);
    };
    const double eps = 1e-12 * (hi - lo);
    double a = lo + eps;
    double b = hi - eps;
    const double ga = g(a);
    // First point from `a` where g reaches `level`, assuming g(a) is on the other side.
    auto crossing = [&](double level) {
        const bool below_at_a = !(ga >= level);
        double l = a, r = b;
        for (int i = 0; i < 200 && r - l > 1e-15 * (1.0 + std::abs(l)); ++i) {
            const double m = 0.5 * (l + r);
            if (!(g(m) >= level) == below_at_a) {
                l = m;
            } else {
                r = m;
            }
        }
        return 0.5 * (l + r);
    };
    constexpr double cutoff = 50.0;
    const bool increasing = !(ga >= g(b));
    if (increasing && !(g(b) <= cutoff)) {
        b = crossing(cutoff);
    } else if (!increasing && !(ga <= cutoff)) {
        a = crossing(cutoff);
    }
    std::vector<double> cuts{a, b};
    const double g_lo = std::min(g(a), g(b));
    const double g_hi = std::max(g(a), g(b));
    for (double level : {1e-3, 1e-2, 0.1, 1.0, 5.0, 20.0}) {
        if (level > g_lo && level < g_hi) {
            cuts.push_back(crossing(level));
        }
    }
    std::sort(cuts.begin(), cuts.end());
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        if (cuts[k + 1] > cuts[k]) {
            total += gauss_kronrod<double, 21>::integrate(f, cuts[k], cuts[k + 1], 8, 1e-10);
        }
    }
    return total;
}

// Standard S1 CDF (scale 1, location 0).
inline double stable_standard_cdf(double alpha, double beta, double z)
{
    constexpr double pi = std::numbers::pi;
    constexpr double half_pi = pi / 2.0;

    if (alpha == 1.0) {
        if (beta == 0.0) {
            return 0.5 + std::atan(z) / pi;
        }
        if (beta < 0.0) {
            return 1.0 - stable_standard_cdf(alpha, -beta, -z);
        }
        const double scale = std::exp(-pi * z / (2.0 * beta));
        auto g = [&](double th) {
            const double a = half_pi + beta * th;
            const double v = (2.0 / pi) * (a / std::cos(th)) * std::exp(a * std::tan(th) / beta);
            return scale * v;
        };
        return integrate_exp_neg(g, -half_pi, half_pi) / pi;
    }

    if (z < 0.0) {
        return 1.0 - stable_standard_cdf(alpha, -beta, -z);
    }
    const double theta0 = std::atan(beta * std::tan(half_pi * alpha)) / alpha;
    if (z == 0.0) {
        return (half_pi - theta0) / pi;
    }
    const double expo = alpha / (alpha - 1.0);
    const double lead = std::pow(std::cos(alpha * theta0), 1.0 / (alpha - 1.0));
    const double zpow = std::pow(z, expo);
    auto g = [&](double th) {
        const double c = std::cos(th);
        const double v = lead * std::pow(c / std::sin(alpha * (theta0 + th)), expo) *
                         std::cos(alpha * theta0 + (alpha - 1.0) * th) / c;
        return zpow * v;
    };
    const double integral = integrate_exp_neg(g, -theta0, half_pi);
    if (alpha < 1.0) {
        return (half_pi - theta0) / pi + integral / pi;
    }
    return 1.0 - integral / pi;
}

inline double stable_cdf(double alpha, double beta, double scale, double x)
{
    if (alpha == 1.0) {
        x -= 2.0 / std::numbers::pi * beta * scale * std::log(scale);
    }
    return std::clamp(stable_standard_cdf(alpha, beta, x / scale), 0.0, 1.0);
}

} // namespace maxss::detail
