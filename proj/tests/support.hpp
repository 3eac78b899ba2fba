#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include <maxss/error.hpp>

// Expects `stmt` to throw maxss::Error of the given kind.
#define EXPECT_MAXSS_ERROR(stmt, expected_kind)                                                  \
    EXPECT_THROW(                                                                                \
        {                                                                                        \
            try {                                                                                \
                stmt;                                                                            \
            } catch (const maxss::Error& maxss_error_) {                                         \
                EXPECT_EQ(maxss_error_.kind(), expected_kind) << maxss_error_.what();            \
                throw;                                                                           \
            }                                                                                    \
        },                                                                                       \
        maxss::Error)

namespace maxss::test {

// Asymptotic Kolmogorov critical value at level 0.01: P{sup|B| > 1.6276} = 0.01.
inline constexpr double kKs01 = 1.6276;
// Same at level 0.001, for families of many simultaneous tests.
inline constexpr double kKs001 = 1.9495;

inline double ks_one_sample(std::vector<double> x, const std::function<double(double)>& cdf)
{
    std::sort(x.begin(), x.end());
    const double n = static_cast<double>(x.size());
    double d = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double f = cdf(x[i]);
        d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
    }
    return d;
}

inline double ks_one_sample_critical(std::size_t n, double k = kKs01)
{
    return k / std::sqrt(static_cast<double>(n));
}

inline double ks_two_sample(std::vector<double> a, std::vector<double> b)
{
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return d;
}

inline double ks_two_sample_critical(std::size_t n, std::size_t m)
{
    const double a = static_cast<double>(n), b = static_cast<double>(m);
    return kKs01 * std::sqrt((a + b) / (a * b));
}

inline double mean(const std::vector<double>& x)
{
    return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

inline double stddev(const std::vector<double>& x)
{
    const double m = mean(x);
    double s = 0.0;
    for (double v : x) s += (v - m) * (v - m);
    return std::sqrt(s / static_cast<double>(x.size() - 1));
}

inline double median(std::vector<double> x)
{
    std::sort(x.begin(), x.end());
    const std::size_t n = x.size();
    return n % 2 == 1 ? x[n / 2] : 0.5 * (x[n / 2 - 1] + x[n / 2]);
}

} // namespace maxss::test
