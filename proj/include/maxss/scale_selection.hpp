#pragma once

#include <boost/math/distributions/normal.hpp>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "error.hpp"
#include "gls.hpp"
#include "max_spectrum.hpp"
#include "psi.hpp"

namespace maxss {

/// Upper (1 - p/2) standard normal quantile.
inline double normal_two_sided_z(double p)
{
    if (!(p > 0.0 && p < 1.0)) {
        detail::fail(ErrorKind::parameter, "significance level must lie in (0, 1)");
    }
    return boost::math::quantile(boost::math::normal_distribution<double>(), 1.0 - p / 2.0);
}

struct SelectionStep {
    int j1Candidate = 0; // current j1, tested for widening to j1Candidate - 1
    double hNew = 0.0;
    double hOld = 0.0;
    double ciLow = 0.0;
    double ciHigh = 0.0;
    bool accepted = false;
};

struct SelectionTrace {
    std::vector<SelectionStep> steps;
    int selectedJ1 = 0;
    GlsFit finalFit;
};

struct SelectionOptions {
    double p = 0.01;
    int b = 3;
    int j2 = 0; // 0 selects jMax
};

/// Backward sequential choice of the lower cutoff scale j1 for a fixed j2.
///
/// Starting from j1 = j2 - b, the range is widened to j1 - 1 while zero lies in
/// (dH -/+ z_{p/2} H_old S1), where dH = H(j1-1, j2) - H(j1, j2) and
/// S1^2 = dw' Sigma_1(1, j2; N) dw for the zero-padded weight difference dw.
/// The floor is jMinValid rather than 1 when low scales are undefined.
inline SelectionTrace select_j1(const MaxSpectrum& spectrum, const PsiTable& psi,
                                SelectionOptions options = {})
{
    const double z = normal_two_sided_z(options.p);
    detail::require(options.b >= 1, ErrorKind::parameter, "back-start b must be >= 1");
    const int j2 = options.j2 == 0 ? spectrum.j_max() : options.j2;
    if (j2 < 2 || j2 > spectrum.j_max()) {
        detail::fail(ErrorKind::range, "j2 must lie in 2..jMax");
    }
    const int floor_j1 = spectrum.j_min_valid();
    const int valid_scales = j2 - floor_j1 + 1;
    if (valid_scales < options.b + 2) {
        detail::fail(ErrorKind::insufficient_scales,
                     "scale selection needs at least b+2=" + std::to_string(options.b + 2) +
                         " valid scales, spectrum has " + std::to_string(std::max(valid_scales, 0)));
    }

    const Eigen::MatrixXd full = covariance_matrix(1, j2, spectrum.n(), psi);
    auto padded = [&](const GlsFit& fit) {
        Eigen::VectorXd w = Eigen::VectorXd::Zero(j2);
        for (std::size_t k = 0; k < fit.w.size(); ++k) {
            w(fit.j1 - 1 + static_cast<Eigen::Index>(k)) = fit.w[k];
        }
        return w;
    };

    SelectionTrace trace;
    int j1 = j2 - options.b;
    GlsFit old_fit = gls_fit(spectrum, j1, j2, psi);
    while (j1 > floor_j1) {
        GlsFit new_fit = gls_fit(spectrum, j1 - 1, j2, psi);
        const Eigen::VectorXd dw = padded(new_fit) - padded(old_fit);
        const double s1 = std::sqrt(std::max(quadratic_form(dw, full), 0.0));
        const double diff = new_fit.H - old_fit.H;
        const double half = z * old_fit.H * s1;

        SelectionStep step;
        step.j1Candidate = j1;
        step.hNew = new_fit.H;
        step.hOld = old_fit.H;
        step.ciLow = diff - std::abs(half);
        step.ciHigh = diff + std::abs(half);
        step.accepted = step.ciLow <= 0.0 && 0.0 <= step.ciHigh;
        trace.steps.push_back(step);
        if (!step.accepted) {
            break;
        }
        --j1;
        old_fit = std::move(new_fit);
    }
    trace.selectedJ1 = j1;
    trace.finalFit = std::move(old_fit);
    return trace;
}

} // namespace maxss
