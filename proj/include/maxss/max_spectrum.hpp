#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace maxss {

/// floor(log2 n) for n >= 1.
inline int floor_log2(std::size_t n) noexcept
{
    return static_cast<int>(std::bit_width(n)) - 1;
}

/// N_j = floor(n / 2^j).
inline std::size_t blocks_at(std::size_t n, int j) noexcept
{
    return j >= 64 ? 0 : n >> j;
}

/// Per-scale statistics Y_j = mean of log2 block maxima over dyadic blocks of
/// size 2^j, j = 1..jMax. Scales below jMinValid have a non-positive block
/// maximum and carry no value.
class MaxSpectrum {
public:
    /// Builds a spectrum from precomputed Y_j values (index 0 is scale 1).
    /// NaN entries mark undefined scales; they must form a prefix.
    static MaxSpectrum from_values(std::size_t n, std::vector<double> y)
    {
        detail::require(n >= 2, ErrorKind::input, "spectrum needs n >= 2");
        if (static_cast<int>(y.size()) != floor_log2(n)) {
            detail::fail(ErrorKind::parameter, "spectrum length must equal floor(log2 n)");
        }
        MaxSpectrum s;
        s.n_ = n;
        s.y_ = std::move(y);
        s.j_min_valid_ = s.j_max() + 1;
        for (int j = s.j_max(); j >= 1; --j) {
            if (std::isnan(s.y_[j - 1])) {
                break;
            }
            s.j_min_valid_ = j;
        }
        for (int j = 1; j < s.j_min_valid_; ++j) {
            s.y_[j - 1] = std::numeric_limits<double>::quiet_NaN();
        }
        return s;
    }

    std::size_t n() const noexcept { return n_; }
    int j_max() const noexcept { return static_cast<int>(y_.size()); }
    int j_min_valid() const noexcept { return j_min_valid_; }
    bool valid(int j) const noexcept { return j >= j_min_valid_ && j <= j_max(); }
    std::size_t blocks(int j) const noexcept { return blocks_at(n_, j); }

    /// Y_j; NaN when the scale is undefined.
    double y(int j) const
    {
        if (j < 1 || j > j_max()) {
            detail::fail(ErrorKind::scale, "scale " + std::to_string(j) + " out of range");
        }
        if (j < j_min_valid_) {
            detail::fail(ErrorKind::validity, "Y_" + std::to_string(j) +
                                                  " is undefined (non-positive block maximum)");
        }
        return y_[j - 1];
    }

    /// Y_j for j = 1..jMax (NaN below jMinValid).
    std::span<const double> values() const noexcept { return y_; }

private:
    std::size_t n_ = 0;
    std::vector<double> y_;
    int j_min_valid_ = 1;
};

/// Maxima of the floor(n/2^j) complete dyadic blocks at scale j; trailing
/// observations that do not fill a block are dropped.
inline std::vector<double> block_maxima(std::span<const double> data, int j)
{
    detail::require(!data.empty(), ErrorKind::input, "block_maxima needs data");
    detail::require(data.size() >= 2, ErrorKind::input, "block_maxima needs n >= 2");
    if (j < 1 || j > floor_log2(data.size())) {
        detail::fail(ErrorKind::scale, "scale " + std::to_string(j) + " out of range [1, " +
                                           std::to_string(floor_log2(data.size())) + "]");
    }
    const std::size_t width = std::size_t{1} << j;
    const std::size_t count = blocks_at(data.size(), j);
    std::vector<double> out(count);
    for (std::size_t k = 0; k < count; ++k) {
        const auto first = data.begin() + static_cast<std::ptrdiff_t>(k * width);
        out[k] = *std::max_element(first, first + static_cast<std::ptrdiff_t>(width));
    }
    return out;
}

/// Full max-spectrum in O(n): scale j+1 maxima are pairwise maxima of scale j.
inline MaxSpectrum compute_spectrum(std::span<const double> data)
{
    detail::require(data.size() >= 2, ErrorKind::input, "spectrum needs at least 2 values");
    const std::size_t n = data.size();
    const int j_max = floor_log2(n);
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();

    std::vector<double> y(static_cast<std::size_t>(j_max), nan);
    std::vector<double> maxima(n / 2);
    for (std::size_t k = 0; k < maxima.size(); ++k) {
        maxima[k] = std::max(data[2 * k], data[2 * k + 1]);
    }
    std::size_t count = maxima.size();
    for (int j = 1; j <= j_max; ++j) {
        if (j > 1) {
            count /= 2;
            for (std::size_t k = 0; k < count; ++k) {
                maxima[k] = std::max(maxima[2 * k], maxima[2 * k + 1]);
            }
        }
        // Summing offsets from the first log keeps a constant series exactly flat.
        const double ref = maxima[0] > 0.0 ? std::log2(maxima[0]) : 0.0;
        double sum = 0.0;
        bool positive = true;
        for (std::size_t k = 0; k < count; ++k) {
            if (!(maxima[k] > 0.0)) {
                positive = false;
                break;
            }
            sum += std::log2(maxima[k]) - ref;
        }
        if (positive) {
            y[static_cast<std::size_t>(j - 1)] = ref + sum / static_cast<double>(count);
        }
    }

    auto spectrum = MaxSpectrum::from_values(n, std::move(y));
    if (spectrum.j_min_valid() > spectrum.j_max()) {
        detail::fail(ErrorKind::degenerate_data,
                     "degenerate data: no scale has all block maxima > 0");
    }
    return spectrum;
}

} // namespace maxss
