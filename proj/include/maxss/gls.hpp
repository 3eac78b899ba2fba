#pragma once

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "distributions.hpp"
#include "error.hpp"
#include "max_spectrum.hpp"
#include "psi.hpp"

namespace maxss {

/// Generalised least squares fit of Y_j = H j + C over scales j1..j2.
struct GlsFit {
    int j1 = 0;
    int j2 = 0;
    double H = 0.0;
    double C = 0.0;
    std::vector<double> w; // slope weights, H = sum w_j Y_j
    std::vector<double> v; // intercept weights, C = sum v_j Y_j
    double cw = 0.0;       // asymptotic variance constant, Var(H) ~ H^2 cw / N_{j2}
    double seH = 0.0;
    std::size_t nTop = 0;  // N_{j2}
};

struct TailEstimate {
    double alpha = 0.0;
    double sigma0 = 0.0;
    GlsFit fit;
};

namespace detail {

inline void check_scale_range(int j1, int j2)
{
    if (j1 < 1 || j2 <= j1) {
        fail(ErrorKind::range, "scale range needs 1 <= j1 < j2 (got j1=" + std::to_string(j1) +
                                   ", j2=" + std::to_string(j2) + ")");
    }
}

template <class Entry>
Eigen::MatrixXd symmetric_matrix(int j1, int j2, Entry entry)
{
    const int m = j2 - j1 + 1;
    Eigen::MatrixXd s(m, m);
    for (int a = 0; a < m; ++a) {
        for (int b = a; b < m; ++b) {
            s(a, b) = entry(j1 + a, j1 + b);
            s(b, a) = s(a, b);
        }
    }
    return s;
}

} // namespace detail

/// Cov(Y_i, Y_j) for unit-exponent Frechet data of size n: entry (i, j), i <= j,
/// is 2^{j-i} psi(j-i) / N_i with N_i = floor(n / 2^i).
inline Eigen::MatrixXd covariance_matrix(int j1, int j2, std::size_t n, const PsiTable& psi)
{
    detail::check_scale_range(j1, j2);
    if (n < 2 || j2 > floor_log2(n)) {
        detail::fail(ErrorKind::range, "j2 exceeds floor(log2 N)");
    }
    return detail::symmetric_matrix(j1, j2, [&](int i, int j) {
        return std::ldexp(psi(j - i), j - i) / static_cast<double>(blocks_at(n, i));
    });
}

/// Large-N limit of N_{j2} * covariance_matrix: entry 2^{max(i,j)-j2} psi(|i-j|).
inline Eigen::MatrixXd asymptotic_sigma1(int j1, int j2, const PsiTable& psi)
{
    detail::check_scale_range(j1, j2);
    return detail::symmetric_matrix(
        j1, j2, [&](int i, int j) { return std::ldexp(psi(j - i), j - j2); });
}

struct GlsWeights {
    Eigen::VectorXd w;
    Eigen::VectorXd v;
};

/// Rows of (A' S^-1 A)^-1 A' S^-1 for A = (j, 1), j = j1..j1+m-1. The result
/// does not change when `sigma` is multiplied by a positive constant.
inline GlsWeights gls_weights(const Eigen::MatrixXd& sigma, int j1)
{
    const Eigen::Index m = sigma.rows();
    detail::require(m >= 2 && sigma.cols() == m, ErrorKind::range, "GLS needs at least 2 scales");

    Eigen::LLT<Eigen::MatrixXd> llt(sigma);
    const double max_diag = sigma.diagonal().maxCoeff();
    if (llt.info() != Eigen::Success || !(max_diag > 0.0)) {
        detail::fail(ErrorKind::numeric, "covariance matrix is not positive definite");
    }
    const Eigen::MatrixXd L = llt.matrixL();
    for (Eigen::Index i = 0; i < m; ++i) {
        if (!(L(i, i) * L(i, i) > 1e-12 * max_diag)) {
            detail::fail(ErrorKind::numeric, "covariance matrix is numerically singular");
        }
    }

    Eigen::MatrixXd a(m, 2);
    for (Eigen::Index k = 0; k < m; ++k) {
        a(k, 0) = static_cast<double>(j1 + k);
        a(k, 1) = 1.0;
    }
    const Eigen::MatrixXd x = llt.solve(a); // S^-1 A
    const Eigen::Matrix2d normal = x.transpose() * a;
    if (std::abs(normal.determinant()) <= 0.0) {
        detail::fail(ErrorKind::numeric, "GLS normal equations are singular");
    }
    const Eigen::MatrixXd rows = normal.inverse() * x.transpose(); // 2 x m
    return {rows.row(0).transpose(), rows.row(1).transpose()};
}

inline double quadratic_form(const Eigen::VectorXd& w, const Eigen::MatrixXd& s)
{
    return w.dot(s * w);
}

/// c_w = w' S1 w with w the GLS slope weights of the asymptotic matrix itself.
inline double exact_cw(int j1, int j2, const PsiTable& psi)
{
    const Eigen::MatrixXd s = asymptotic_sigma1(j1, j2, psi);
    return quadratic_form(gls_weights(s, j1).w, s);
}

enum class CwConvention {
    /// Reproduces the published c_w table: matrix 2^{(i+j)/2 - j2} psi(|i-j|)
    /// with GLS weights from that matrix.
    tabulated,
    /// Same as exact_cw(): the asymptotic matrix used for standard errors.
    exact,
};

/// Variance constant c_w for the range j1..j2.
///
/// The default reproduces the published table of constants, whose matrix
/// normalises lag terms by 2^{(i+j)/2} instead of 2^{max(i,j)}. That differs
/// from the true covariance limit, so GlsFit::cw and all standard errors use
/// CwConvention::exact; sqrt(2^j2 c_w) tends to 1.833 (tabulated) and 1.610
/// (exact) as j2 grows.
inline double cw_constant(int j1, int j2, const PsiTable& psi,
                          CwConvention convention = CwConvention::tabulated)
{
    if (convention == CwConvention::exact) {
        return exact_cw(j1, j2, psi);
    }
    detail::check_scale_range(j1, j2);
    const Eigen::MatrixXd s = detail::symmetric_matrix(j1, j2, [&](int i, int j) {
        return std::exp2(0.5 * (i + j) - j2) * psi(j - i);
    });
    return quadratic_form(gls_weights(s, j1).w, s);
}

struct GlsSolution {
    double H;
    double C;
    GlsWeights weights;
};

/// GLS line fit of `y` (scales j1..j1+m-1) under covariance `sigma`.
inline GlsSolution gls_solve(std::span<const double> y, int j1, const Eigen::MatrixXd& sigma)
{
    detail::require(static_cast<Eigen::Index>(y.size()) == sigma.rows(), ErrorKind::range,
                    "spectrum slice and covariance sizes differ");
    GlsWeights weights = gls_weights(sigma, j1);
    // The slope weights sum to zero, so centring on the last value changes
    // nothing analytically and gives an exact zero on a flat spectrum.
    const double anchor = y.back();
    double h = 0.0, c = 0.0;
    for (std::size_t k = 0; k < y.size(); ++k) {
        h += weights.w(static_cast<Eigen::Index>(k)) * (y[k] - anchor);
        c += weights.v(static_cast<Eigen::Index>(k)) * y[k];
    }
    return {h, c, std::move(weights)};
}

/// Fits the max-spectrum over scales j1..j2 with the finite-N Frechet covariance.
inline GlsFit gls_fit(const MaxSpectrum& spectrum, int j1, int j2, const PsiTable& psi)
{
    detail::check_scale_range(j1, j2);
    if (j2 > spectrum.j_max()) {
        detail::fail(ErrorKind::range, "j2=" + std::to_string(j2) + " exceeds jMax=" +
                                           std::to_string(spectrum.j_max()));
    }
    if (j1 < spectrum.j_min_valid()) {
        detail::fail(ErrorKind::validity,
                     "Y_j undefined at scales below " + std::to_string(spectrum.j_min_valid()) +
                         " (non-positive block maxima); choose j1 >= jMinValid");
    }

    const auto y = spectrum.values().subspan(static_cast<std::size_t>(j1 - 1),
                                             static_cast<std::size_t>(j2 - j1 + 1));
    GlsSolution sol = gls_solve(y, j1, covariance_matrix(j1, j2, spectrum.n(), psi));

    GlsFit fit;
    fit.j1 = j1;
    fit.j2 = j2;
    fit.H = sol.H;
    fit.C = sol.C;
    fit.w.assign(sol.weights.w.data(), sol.weights.w.data() + sol.weights.w.size());
    fit.v.assign(sol.weights.v.data(), sol.weights.v.data() + sol.weights.v.size());
    fit.cw = quadratic_form(sol.weights.w, asymptotic_sigma1(j1, j2, psi));
    fit.nTop = spectrum.blocks(j2);
    fit.seH = std::abs(fit.H) * std::sqrt(fit.cw / static_cast<double>(fit.nTop));
    return fit;
}

/// alpha = 1/H and sigma0 = 2^{C - H E log2 Z} for Z standard 1-Frechet.
inline TailEstimate tail_estimate(const GlsFit& fit)
{
    if (!(fit.H > 0.0)) {
        detail::fail(ErrorKind::nonpositive_slope,
                     "degenerate spectrum: zero slope (H <= 0), data not heavy tailed at scales " +
                         std::to_string(fit.j1) + ".." + std::to_string(fit.j2));
    }
    const double log2_mean_unit = euler_gamma / std::numbers::ln2;
    return {1.0 / fit.H, std::exp2(fit.C - fit.H * log2_mean_unit), fit};
}

/// Per-scale display half-width z * H * sqrt(psi(0) / N_j) around Y_j.
inline double spectrum_halfwidth(double H, const PsiTable& psi, std::size_t blocks, double z = 1.959963984540054)
{
    return z * std::abs(H) * std::sqrt(psi(0) / static_cast<double>(blocks));
}

} // namespace maxss
