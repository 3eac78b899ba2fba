#pragma once

#include <boost/math/distributions/students_t.hpp>

#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <string>
#include <variant>
#include <vector>

#include "detail/overloaded.hpp"
#include "detail/stable.hpp"
#include "error.hpp"
#include "rng.hpp"

namespace maxss {

/// Euler-Mascheroni constant to 20 digits.
inline constexpr double euler_gamma = 0.57721566490153286061;

namespace detail {

inline void require_positive(double value, const char* name)
{
    if (!(value > 0.0) || !std::isfinite(value)) {
        fail(ErrorKind::parameter, std::string(name) + " must be finite and > 0");
    }
}

inline void require_open_unit(double value, const char* name)
{
    if (!(value > 0.0 && value < 1.0)) {
        fail(ErrorKind::parameter, std::string(name) + " must lie in (0, 1)");
    }
}

inline void require_ordered(double lower, double upper)
{
    if (!(lower < upper)) {
        fail(ErrorKind::parameter, "alpha0 must be strictly smaller than alpha1");
    }
}

} // namespace detail

// Distribution models. Constructors validate, so a constructed value is
// always a valid model.

struct Pareto {
    double alpha;
    double sigma0;
    Pareto(double alpha_, double sigma0_) : alpha(alpha_), sigma0(sigma0_)
    {
        detail::require_positive(alpha, "alpha");
        detail::require_positive(sigma0, "sigma0");
    }
};

struct Frechet {
    double alpha;
    double sigma0;
    Frechet(double alpha_, double sigma0_) : alpha(alpha_), sigma0(sigma0_)
    {
        detail::require_positive(alpha, "alpha");
        detail::require_positive(sigma0, "sigma0");
    }
};

/// p * Pareto(alpha0, sigma0) + (1 - p) * Pareto(alpha1, sigma1), alpha0 < alpha1.
struct ParetoMixture {
    double p;
    double alpha0;
    double sigma0;
    double alpha1;
    double sigma1;
    ParetoMixture(double p_, double alpha0_, double sigma0_, double alpha1_, double sigma1_)
        : p(p_), alpha0(alpha0_), sigma0(sigma0_), alpha1(alpha1_), sigma1(sigma1_)
    {
        detail::require_open_unit(p, "p");
        detail::require_positive(alpha0, "alpha0");
        detail::require_positive(alpha1, "alpha1");
        detail::require_positive(sigma0, "sigma0");
        detail::require_positive(sigma1, "sigma1");
        detail::require_ordered(alpha0, alpha1);
    }
};

/// max(sigma0 Z0, sigma1 Z1) for independent standard alpha0-/alpha1-Frechet.
struct FrechetMaxProduct {
    double alpha0;
    double sigma0;
    double alpha1;
    double sigma1;
    FrechetMaxProduct(double alpha0_, double sigma0_, double alpha1_, double sigma1_)
        : alpha0(alpha0_), sigma0(sigma0_), alpha1(alpha1_), sigma1(sigma1_)
    {
        detail::require_positive(alpha0, "alpha0");
        detail::require_positive(alpha1, "alpha1");
        detail::require_positive(sigma0, "sigma0");
        detail::require_positive(sigma1, "sigma1");
        detail::require_ordered(alpha0, alpha1);
    }
};

/// Bernoulli(p_frechet) choice between an alpha-Frechet and an exponential.
struct ExpFrechetMixture {
    double p_frechet = 0.1;
    double alpha = 1.0;
    double sigma0 = 1.0;
    double exp_mean = 5.0;
    ExpFrechetMixture() = default;
    ExpFrechetMixture(double p_frechet_, double alpha_, double sigma0_, double exp_mean_)
        : p_frechet(p_frechet_), alpha(alpha_), sigma0(sigma0_), exp_mean(exp_mean_)
    {
        detail::require_open_unit(p_frechet, "pFrechet");
        detail::require_positive(alpha, "alpha");
        detail::require_positive(sigma0, "sigma0");
        detail::require_positive(exp_mean, "expMean");
    }
};

/// Stable law, S1 parameterisation, location 0.
struct Stable {
    double alpha;
    double beta;
    double scale;
    Stable(double alpha_, double beta_, double scale_) : alpha(alpha_), beta(beta_), scale(scale_)
    {
        if (!(alpha > 0.0 && alpha < 2.0)) {
            detail::fail(ErrorKind::parameter, "stable alpha must lie in (0, 2)");
        }
        if (!(beta >= -1.0 && beta <= 1.0)) {
            detail::fail(ErrorKind::parameter, "stable beta must lie in [-1, 1]");
        }
        detail::require_positive(scale, "scale");
    }
};

struct StudentT {
    double dof;
    explicit StudentT(double dof_) : dof(dof_) { detail::require_positive(dof, "dof"); }
};

using DistributionSpec = std::variant<Pareto, Frechet, ParetoMixture, FrechetMaxProduct,
                                      ExpFrechetMixture, Stable, StudentT>;

/// Tail exponent governing P{X > x} for large x.
inline double dominant_alpha(const DistributionSpec& spec)
{
    return std::visit(
        Overloaded{
            [](const Pareto& d) { return d.alpha; },
            [](const Frechet& d) { return d.alpha; },
            [](const ParetoMixture& d) { return d.alpha0; },
            [](const FrechetMaxProduct& d) { return d.alpha0; },
            [](const ExpFrechetMixture& d) { return d.alpha; },
            [](const Stable& d) { return d.alpha; },
            [](const StudentT& d) { return d.dof; },
        },
        spec);
}

inline double pareto_quantile(double alpha, double sigma0, double u)
{
    return sigma0 * std::pow(1.0 - u, -1.0 / alpha);
}

inline double frechet_quantile(double alpha, double sigma0, double u)
{
    return sigma0 * std::pow(-std::log(u), -1.0 / alpha);
}

/// One draw from `spec` using the generator's next variates.
inline double draw(const DistributionSpec& spec, Rng& rng)
{
    return std::visit(
        Overloaded{
            [&](const Pareto& d) { return pareto_quantile(d.alpha, d.sigma0, rng.uniform()); },
            [&](const Frechet& d) { return frechet_quantile(d.alpha, d.sigma0, rng.uniform()); },
            [&](const ParetoMixture& d) {
                const bool first = rng.uniform() < d.p;
                const double u = rng.uniform();
                return first ? pareto_quantile(d.alpha0, d.sigma0, u)
                             : pareto_quantile(d.alpha1, d.sigma1, u);
            },
            [&](const FrechetMaxProduct& d) {
                const double z0 = frechet_quantile(d.alpha0, d.sigma0, rng.uniform());
                const double z1 = frechet_quantile(d.alpha1, d.sigma1, rng.uniform());
                return std::max(z0, z1);
            },
            [&](const ExpFrechetMixture& d) {
                const bool frechet = rng.uniform() < d.p_frechet;
                const double u = rng.uniform();
                return frechet ? frechet_quantile(d.alpha, d.sigma0, u) : -d.exp_mean * std::log(u);
            },
            [&](const Stable& d) { return detail::stable_draw(d.alpha, d.beta, d.scale, rng); },
            [&](const StudentT& d) {
                const double z = rng.normal();
                const double chi2 = 2.0 * rng.gamma(0.5 * d.dof);
                return z / std::sqrt(chi2 / d.dof);
            },
        },
        spec);
}

/// n i.i.d. draws; identical (spec, n, stream) always gives identical output.
inline std::vector<double> sample(const DistributionSpec& spec, std::size_t n, SeededStream stream)
{
    detail::require(n >= 1, ErrorKind::parameter, "sample size must be >= 1");
    Rng rng(stream);
    std::vector<double> out(n);
    for (auto& x : out) {
        x = draw(spec, rng);
    }
    return out;
}

namespace detail {

inline double pareto_cdf(double alpha, double sigma0, double x)
{
    return x <= sigma0 ? 0.0 : -std::expm1(-alpha * std::log(x / sigma0));
}

inline double frechet_cdf(double alpha, double sigma0, double x)
{
    return x <= 0.0 ? 0.0 : std::exp(-std::pow(x / sigma0, -alpha));
}

} // namespace detail

inline double cdf(const DistributionSpec& spec, double x)
{
    return std::visit(
        Overloaded{
            [&](const Pareto& d) { return detail::pareto_cdf(d.alpha, d.sigma0, x); },
            [&](const Frechet& d) { return detail::frechet_cdf(d.alpha, d.sigma0, x); },
            [&](const ParetoMixture& d) {
                return d.p * detail::pareto_cdf(d.alpha0, d.sigma0, x) +
                       (1.0 - d.p) * detail::pareto_cdf(d.alpha1, d.sigma1, x);
            },
            [&](const FrechetMaxProduct& d) {
                return detail::frechet_cdf(d.alpha0, d.sigma0, x) *
                       detail::frechet_cdf(d.alpha1, d.sigma1, x);
            },
            [&](const ExpFrechetMixture& d) {
                if (x <= 0.0) {
                    return 0.0;
                }
                return d.p_frechet * detail::frechet_cdf(d.alpha, d.sigma0, x) +
                       (1.0 - d.p_frechet) * -std::expm1(-x / d.exp_mean);
            },
            [&](const Stable& d) { return detail::stable_cdf(d.alpha, d.beta, d.scale, x); },
            [&](const StudentT& d) {
                return boost::math::cdf(boost::math::students_t_distribution<double>(d.dof), x);
            },
        },
        spec);
}

/// sigma^alpha(x) = -x^alpha ln F(x) for the models with a closed form, with
/// alpha the dominant exponent. Returns +infinity where F(x) = 0.
inline double sigma_alpha(const DistributionSpec& spec, double x)
{
    detail::require(x > 0.0, ErrorKind::parameter, "sigma_alpha needs x > 0");
    constexpr double inf = std::numeric_limits<double>::infinity();
    return std::visit(
        Overloaded{
            [&](const Pareto& d) {
                if (x <= d.sigma0) {
                    return inf;
                }
                return -std::pow(x, d.alpha) * std::log1p(-std::pow(x / d.sigma0, -d.alpha));
            },
            [&](const Frechet& d) { return std::pow(d.sigma0, d.alpha); },
            [&](const ParetoMixture& d) {
                const double f = cdf(spec, x);
                if (f <= 0.0) {
                    return inf;
                }
                return -std::pow(x, d.alpha0) * std::log(f);
            },
            [&](const FrechetMaxProduct& d) {
                return std::pow(d.sigma0, d.alpha0) +
                       std::pow(d.sigma1, d.alpha1) * std::pow(x, -(d.alpha1 - d.alpha0));
            },
            [&](const auto&) -> double {
                detail::fail(ErrorKind::unsupported_model,
                             "sigma_alpha has no closed form for this model");
            },
        },
        spec);
}

/// Analytic moments of an alpha-Frechet variable Z with scale coefficient sigma.
struct FrechetMoments {
    double alpha;
    double sigma;

    FrechetMoments(double alpha_, double sigma_) : alpha(alpha_), sigma(sigma_)
    {
        detail::require_positive(alpha, "alpha");
        detail::require_positive(sigma, "sigma");
    }

    /// E Z^p = sigma^p Gamma(1 - p/alpha), finite only for 0 < p < alpha.
    double power(double p) const
    {
        if (p >= alpha) {
            detail::fail(ErrorKind::infinite_moment, "E Z^p is infinite for p >= alpha");
        }
        detail::require(p > 0.0, ErrorKind::parameter, "moment order must be > 0");
        return std::pow(sigma, p) * std::tgamma(1.0 - p / alpha);
    }

    double log2_mean() const
    {
        return std::log2(sigma) + euler_gamma / (alpha * std::numbers::ln2);
    }

    double log2_variance() const
    {
        const double a = alpha * std::numbers::ln2;
        return std::numbers::pi * std::numbers::pi / (6.0 * a * a);
    }
};

inline double frechet_moments(double alpha, double sigma, double p)
{
    return FrechetMoments(alpha, sigma).power(p);
}

} // namespace maxss
