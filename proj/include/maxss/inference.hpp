#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "error.hpp"
#include "gls.hpp"
#include "max_spectrum.hpp"
#include "parallel.hpp"
#include "psi.hpp"
#include "rng.hpp"
#include "scale_selection.hpp"

namespace maxss {

struct Interval {
    double low = 0.0;
    double high = 0.0;
};

struct AsymptoticMethod {};

struct PermutationMethod {
    std::size_t replicates = 0;
    std::uint64_t seed = 0;
    std::size_t dropped = 0;
    std::vector<double> hReplicates; // in replicate order, dropped ones omitted
};

using CiMethod = std::variant<AsymptoticMethod, PermutationMethod>;

struct ConfidenceReport {
    double level = 0.95;
    Interval hInterval;
    Interval alphaInterval;     // high is +inf when hInterval.low <= 0
    bool alphaUnbounded = false;
    CiMethod method;
    GlsFit fit;
    std::optional<TailEstimate> pointEstimate; // empty when fit.H <= 0
};

namespace detail {

inline void check_level(double level)
{
    if (!(level > 0.0 && level < 1.0)) {
        fail(ErrorKind::parameter, "confidence level must lie in (0, 1)");
    }
}

// alpha = 1/H maps (hLow, hHigh) onto (1/hHigh, 1/hLow).
inline std::pair<Interval, bool> invert_interval(Interval h)
{
    constexpr double inf = std::numeric_limits<double>::infinity();
    Interval a{h.high > 0.0 ? 1.0 / h.high : inf, h.low > 0.0 ? 1.0 / h.low : inf};
    return {a, !(h.low > 0.0)};
}

inline std::optional<TailEstimate> try_tail_estimate(const GlsFit& fit)
{
    if (fit.H > 0.0) {
        return tail_estimate(fit);
    }
    return std::nullopt;
}

} // namespace detail

/// Empirical quantile with linear interpolation between order statistics
/// (position (n-1) q in the sorted sample).
inline double empirical_quantile(std::span<const double> sorted, double q)
{
    detail::require(!sorted.empty(), ErrorKind::input, "quantile of an empty sample");
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    if (lo + 1 >= sorted.size()) {
        return sorted.back();
    }
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

/// H +/- z_{p/2} H sqrt(c_w / N_{j2}) with p = 1 - level; alpha by inversion.
inline ConfidenceReport asymptotic_ci(const GlsFit& fit, double level = 0.95)
{
    detail::check_level(level);
    if (!(fit.H > 0.0)) {
        detail::fail(ErrorKind::nonpositive_slope,
                     "degenerate spectrum: zero slope (H <= 0), no confidence interval");
    }
    const double z = normal_two_sided_z(1.0 - level);
    const double half = z * fit.H * std::sqrt(fit.cw / static_cast<double>(fit.nTop));

    ConfidenceReport report;
    report.level = level;
    report.hInterval = {fit.H - half, fit.H + half};
    std::tie(report.alphaInterval, report.alphaUnbounded) = detail::invert_interval(report.hInterval);
    report.method = AsymptoticMethod{};
    report.fit = fit;
    report.pointEstimate = tail_estimate(fit);
    return report;
}

struct BootstrapOptions {
    std::size_t replicates = 1000;
    double level = 0.95;
    Threads threads{};
};

/// Permutation bootstrap: replicate i shuffles the data (Fisher-Yates, stream
/// child i), recomputes the spectrum and the GLS slope over j1..j2. The
/// H-interval is the pair of empirical (1-level)/2 and (1+level)/2 quantiles.
/// Replicates whose spectrum is undefined at j1 are dropped; more than 5%
/// dropped is a degenerate-data error.
inline ConfidenceReport permutation_bootstrap(std::span<const double> data, int j1, int j2,
                                              const PsiTable& psi, SeededStream stream,
                                              BootstrapOptions options = {})
{
    detail::check_level(options.level);
    detail::require(options.replicates >= 100, ErrorKind::parameter,
                    "bootstrap needs at least 100 replicates");

    const MaxSpectrum spectrum = compute_spectrum(data);
    GlsFit fit = gls_fit(spectrum, j1, j2, psi);

    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> per_replicate(options.replicates, nan);
    parallel_for(options.replicates, options.threads, [&](std::size_t i) {
        std::vector<double> shuffled(data.begin(), data.end());
        Rng rng(stream.child(i));
        for (std::size_t k = shuffled.size() - 1; k > 0; --k) {
            std::swap(shuffled[k], shuffled[rng.below(k + 1)]);
        }
        try {
            const MaxSpectrum s = compute_spectrum(shuffled);
            if (s.j_min_valid() <= j1) {
                per_replicate[i] = gls_fit(s, j1, j2, psi).H;
            }
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::degenerate_data) {
                throw;
            }
        }
    });

    PermutationMethod method;
    method.replicates = options.replicates;
    method.seed = stream.seed;
    for (double h : per_replicate) {
        if (std::isnan(h)) {
            ++method.dropped;
        } else {
            method.hReplicates.push_back(h);
        }
    }
    if (static_cast<double>(method.dropped) > 0.05 * static_cast<double>(options.replicates)) {
        detail::fail(ErrorKind::degenerate_data,
                     std::to_string(method.dropped) + " of " + std::to_string(options.replicates) +
                         " permuted replicates have undefined Y_j at j1; more than 5% dropped");
    }

    std::vector<double> sorted = method.hReplicates;
    std::sort(sorted.begin(), sorted.end());
    const double tail = (1.0 - options.level) / 2.0;

    ConfidenceReport report;
    report.level = options.level;
    report.hInterval = {empirical_quantile(sorted, tail), empirical_quantile(sorted, 1.0 - tail)};
    std::tie(report.alphaInterval, report.alphaUnbounded) = detail::invert_interval(report.hInterval);
    report.pointEstimate = detail::try_tail_estimate(fit);
    report.fit = std::move(fit);
    report.method = std::move(method);
    return report;
}

namespace detail {

// Strictly positive values, sorted descending.
inline std::vector<double> positive_descending(std::span<const double> data)
{
    std::vector<double> out;
    out.reserve(data.size());
    for (double x : data) {
        if (x > 0.0) {
            out.push_back(x);
        }
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

} // namespace detail

/// Hill estimator from the k+1 largest order statistics (natural logs):
/// 1 / ( k^-1 sum_{i<=k} i (ln X(i) - ln X(i+1)) ).
inline double hill_estimate(std::span<const double> data, std::size_t k)
{
    if (k < 1 || k + 1 > data.size()) {
        detail::fail(ErrorKind::parameter, "Hill estimator needs 1 <= k <= n-1 (k=" +
                                               std::to_string(k) + ", n=" +
                                               std::to_string(data.size()) + ")");
    }
    std::vector<double> top(data.begin(), data.end());
    const auto kth = top.begin() + static_cast<std::ptrdiff_t>(k);
    std::nth_element(top.begin(), kth, top.end(), std::greater<>());
    const double threshold = *kth;
    if (!(threshold > 0.0)) {
        detail::fail(ErrorKind::domain, "Hill estimator needs the top k+1 order statistics > 0");
    }
    double sum = 0.0;
    for (auto it = top.begin(); it != kth; ++it) {
        sum += std::log(*it / threshold);
    }
    return static_cast<double>(k) / sum;
}

struct HillPoint {
    std::size_t k;
    double alpha;
};

/// Hill estimates for every k = 1..m-1, m the number of positive values,
/// after one sort; each point costs O(1) from a running sum.
inline std::vector<HillPoint> hill_plot(std::span<const double> data)
{
    detail::require(data.size() >= 3, ErrorKind::parameter, "Hill plot needs n >= 3");
    const std::vector<double> x = detail::positive_descending(data);
    if (x.size() < 2) {
        detail::fail(ErrorKind::domain, "Hill plot needs at least two positive values");
    }
    std::vector<HillPoint> out;
    out.reserve(x.size() - 1);
    const double top = x.front();
    double running = 0.0; // sum_{i<=k} ln(X(i)/X(1))
    for (std::size_t k = 1; k < x.size(); ++k) {
        running += std::log(x[k - 1] / top);
        const double mean = running / static_cast<double>(k) - std::log(x[k] / top);
        out.push_back({k, 1.0 / mean});
    }
    return out;
}

} // namespace maxss
