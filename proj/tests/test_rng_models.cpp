#include <cmath>
#include <cstring>
#include <numbers>
#include <set>

#include <gtest/gtest.h>

#include <maxss/distributions.hpp>

#include "support.hpp"

using namespace maxss;

TEST(InverseCdf, ParetoMedianOfUnitLaw) { EXPECT_DOUBLE_EQ(pareto_quantile(1.0, 1.0, 0.5), 2.0); }

TEST(InverseCdf, FrechetAtInverseE) { EXPECT_NEAR(frechet_quantile(2.0, 1.0, std::exp(-1.0)), 1.0, 1e-15); }

TEST(InverseCdf, RoundTripParetoAndFrechet)
{
    Rng rng(SeededStream{7, 0});
    for (int i = 0; i < 1000; ++i) {
        const double u = rng.uniform();
        const double alpha = 0.2 + 4.0 * rng.uniform();
        const double sigma = 0.1 + 10.0 * rng.uniform();
        EXPECT_NEAR(cdf(Pareto(alpha, sigma), pareto_quantile(alpha, sigma, u)), u, 1e-12);
        EXPECT_NEAR(cdf(Frechet(alpha, sigma), frechet_quantile(alpha, sigma, u)), u, 1e-12);
    }
}

TEST(Sample, ParetoExceedanceFraction)
{
    const auto x = sample(Pareto(1.5, 1.0), 1'000'000, SeededStream{11, 0});
    const double frac =
        static_cast<double>(std::count_if(x.begin(), x.end(), [](double v) { return v > 10.0; })) /
        static_cast<double>(x.size());
    EXPECT_NEAR(frac, 0.0316227766016838, 0.001);
}

TEST(Sample, DeterministicPerStream)
{
    const DistributionSpec spec = Stable(1.3, 0.4, 2.0);
    const auto a = sample(spec, 1000, SeededStream{5, 3});
    const auto b = sample(spec, 1000, SeededStream{5, 3});
    EXPECT_EQ(0, std::memcmp(a.data(), b.data(), a.size() * sizeof(double)));
    EXPECT_NE(a, sample(spec, 1000, SeededStream{5, 4}));
    EXPECT_NE(a, sample(spec, 1000, SeededStream{6, 3}));
}

TEST(Sample, ChildStreamsAreDistinct)
{
    std::set<std::uint64_t> firsts;
    const SeededStream parent{99, 0};
    for (std::uint64_t i = 0; i < 1000; ++i) {
        Rng rng(parent.child(i));
        firsts.insert(rng());
    }
    EXPECT_EQ(firsts.size(), 1000u);
    EXPECT_NE(parent.child(1), SeededStream(99, 1).child(0));
}

TEST(Sample, RejectsBadParameters)
{
    EXPECT_MAXSS_ERROR(Pareto(-1.0, 1.0), ErrorKind::parameter);
    EXPECT_MAXSS_ERROR(Frechet(1.0, 0.0), ErrorKind::parameter);
    EXPECT_MAXSS_ERROR(ParetoMixture(0.5, 2.0, 1.0, 1.0, 1.0), ErrorKind::parameter);
    EXPECT_MAXSS_ERROR(ParetoMixture(1.0, 1.0, 1.0, 2.0, 1.0), ErrorKind::parameter);
    EXPECT_MAXSS_ERROR(FrechetMaxProduct(2.0, 1.0, 2.0, 1.0), ErrorKind::parameter);
    EXPECT_MAXSS_ERROR(ExpFrechetMixture(0.1, 1.0, 1.0, -5.0), ErrorKind::parameter);
    EXPECT_MAXSS_ERROR(Stable(2.0, 0.0, 1.0), ErrorKind::parameter);
    EXPECT_MAXSS_ERROR(Stable(1.5, 1.5, 1.0), ErrorKind::parameter);
    EXPECT_MAXSS_ERROR(StudentT(0.0), ErrorKind::parameter);
    EXPECT_MAXSS_ERROR(sample(Pareto(1.0, 1.0), 0, SeededStream{}), ErrorKind::parameter);
}

// Each sampler agrees with its own CDF (one-sample KS at level 0.01).
TEST(Sample, MatchesCdfForEveryModel)
{
    const std::vector<DistributionSpec> specs = {
        Pareto(1.5, 2.0),
        Frechet(0.7, 3.0),
        ParetoMixture(0.3, 1.0, 1.0, 3.0, 2.0),
        FrechetMaxProduct(1.0, 2.0, 3.0, 1.0),
        ExpFrechetMixture(0.1, 1.0, 1.0, 5.0),
        Stable(1.5, 0.0, 1.0),
        Stable(0.8, -0.3, 2.0),
        Stable(1.0, 0.7, 1.0),
        Stable(1.9, 1.0, 0.5),
        StudentT(3.0),
        StudentT(0.5),
    };
    std::uint64_t id = 0;
    for (const auto& spec : specs) {
        const auto x = sample(spec, 20'000, SeededStream{2024, id++});
        const double d = test::ks_one_sample(x, [&](double v) { return cdf(spec, v); });
        // Eleven tests at once: 0.1% each keeps the family error near 1%.
        EXPECT_LT(d, test::ks_one_sample_critical(x.size(), test::kKs001)) << "model index " << spec.index();
    }
}

TEST(Cdf, FrechetUnitAtOne) { EXPECT_NEAR(cdf(Frechet(1.0, 1.0), 1.0), 0.36787944117144233, 1e-15); }

TEST(Cdf, ParetoAtTwo) { EXPECT_DOUBLE_EQ(cdf(Pareto(2.0, 1.0), 2.0), 0.75); }

TEST(Cdf, MaxProductIsProductOfFrechetCdfs)
{
    EXPECT_NEAR(cdf(FrechetMaxProduct(1.0, 1.0, 2.0, 1.0), 1.0), 0.1353352832366127, 1e-15);
}

TEST(Cdf, ZeroBelowSupport)
{
    EXPECT_EQ(cdf(Pareto(1.0, 2.0), 1.5), 0.0);
    EXPECT_EQ(cdf(Frechet(1.0, 1.0), -3.0), 0.0);
    EXPECT_EQ(cdf(ExpFrechetMixture(0.1, 1.0, 1.0, 5.0), 0.0), 0.0);
}

TEST(Cdf, StableSpecialCases)
{
    // Cauchy and Levy have closed forms.
    EXPECT_NEAR(cdf(Stable(1.0, 0.0, 1.0), 1.0), 0.75, 1e-10);
    EXPECT_NEAR(cdf(Stable(1.0, 0.0, 1.0), -3.0), 0.10241638234956672, 1e-10);
    EXPECT_NEAR(cdf(Stable(0.5, 1.0, 1.0), 2.0), 0.4795001221869535, 1e-9);
    EXPECT_NEAR(cdf(Stable(0.5, 1.0, 1.0), 0.3), 0.06788915486182903, 1e-9);
    EXPECT_EQ(cdf(Stable(0.5, 1.0, 1.0), -0.1), 0.0);
}

// Reference values from Fourier inversion of the characteristic function.
TEST(Cdf, StableGeneralAgainstReference)
{
    EXPECT_NEAR(cdf(Stable(1.5, 0.0, 1.0), 1.0), 0.7563420243992705, 1e-8);
    EXPECT_NEAR(cdf(Stable(1.5, 0.5, 1.0), -0.7), 0.40523217033462058, 1e-8);
    EXPECT_NEAR(cdf(Stable(0.8, -0.3, 1.0), 2.0), 0.9093906884470569, 1e-8);
    EXPECT_NEAR(cdf(Stable(1.0, 0.7, 1.0), 1.3), 0.6732539610530397, 1e-8);
    EXPECT_NEAR(cdf(Stable(1.9, 1.0, 1.0), 0.4), 0.6346263547306085, 1e-8);
}

TEST(Cdf, StudentT)
{
    EXPECT_NEAR(cdf(StudentT(3.0), 2.5), 0.9561466764959673, 1e-12);
    EXPECT_NEAR(cdf(StudentT(0.5), -4.0), 0.15961004149433577, 1e-10);
}

TEST(SigmaAlpha, ParetoAtTwo) { EXPECT_NEAR(sigma_alpha(Pareto(1.0, 1.0), 2.0), 2.0 * std::numbers::ln2, 1e-14); }

TEST(SigmaAlpha, InfiniteBelowParetoScale)
{
    EXPECT_EQ(sigma_alpha(Pareto(1.0, 1.0), 0.5), std::numeric_limits<double>::infinity());
    EXPECT_EQ(sigma_alpha(ParetoMixture(0.5, 1.0, 2.0, 2.0, 3.0), 1.0),
              std::numeric_limits<double>::infinity());
}

TEST(SigmaAlpha, MaxProductClosedForm)
{
    EXPECT_NEAR(sigma_alpha(FrechetMaxProduct(1.0, 2.0, 3.0, 1.0), 10.0), 2.01, 1e-14);
}

TEST(SigmaAlpha, FrechetIsConstant) { EXPECT_NEAR(sigma_alpha(Frechet(2.0, 3.0), 0.7), 9.0, 1e-13); }

TEST(SigmaAlpha, ParetoMixtureMatchesDefinition)
{
    const ParetoMixture m(0.4, 1.0, 1.0, 2.5, 1.5);
    for (double x : {2.0, 5.0, 50.0}) {
        EXPECT_NEAR(sigma_alpha(m, x), -x * std::log(cdf(m, x)), 1e-12 * x);
    }
}

TEST(SigmaAlpha, UnsupportedModels)
{
    EXPECT_MAXSS_ERROR(sigma_alpha(Stable(1.5, 0.0, 1.0), 1.0), ErrorKind::unsupported_model);
    EXPECT_MAXSS_ERROR(sigma_alpha(StudentT(2.0), 1.0), ErrorKind::unsupported_model);
    EXPECT_MAXSS_ERROR(sigma_alpha(ExpFrechetMixture(0.1, 1.0, 1.0, 5.0), 1.0),
                       ErrorKind::unsupported_model);
}

// x^alpha (sigma^alpha(x) - sigma0^alpha) tends to sigma0^{2 alpha} / 2.
TEST(SigmaAlpha, ParetoSecondOrderRate)
{
    const double x = 100.0;
    const double scaled = x * (sigma_alpha(Pareto(1.0, 1.0), x) - 1.0);
    EXPECT_NEAR(scaled, 0.5, 0.005);
    const double scaled2 = 1e4 * (sigma_alpha(Pareto(2.0, 1.0), 100.0) - 1.0);
    EXPECT_NEAR(scaled2, 0.5, 0.005);
}

TEST(FrechetMoments, PowerMoment) { EXPECT_NEAR(frechet_moments(2.0, 1.0, 1.0), std::sqrt(std::numbers::pi), 1e-14); }

TEST(FrechetMoments, ScaleEnters)
{
    EXPECT_NEAR(frechet_moments(3.0, 2.0, 1.5), std::pow(2.0, 1.5) * std::tgamma(0.5), 1e-13);
}

TEST(FrechetMoments, LogMoments)
{
    const FrechetMoments m(1.0, 1.0);
    EXPECT_NEAR(m.log2_variance(), 3.4237147425373034, 1e-14);
    EXPECT_NEAR(m.log2_variance(), 3.423696, 1e-4); // tabulated lag-zero psi
    EXPECT_NEAR(m.log2_mean(), 0.83274617727686715, 1e-14);
    EXPECT_NEAR(FrechetMoments(2.0, 4.0).log2_mean(), 2.0 + 0.83274617727686715 / 2.0, 1e-14);
}

TEST(FrechetMoments, InfiniteMoment)
{
    EXPECT_MAXSS_ERROR(frechet_moments(2.0, 1.0, 2.0), ErrorKind::infinite_moment);
    EXPECT_MAXSS_ERROR(frechet_moments(1.0, 1.0, 3.0), ErrorKind::infinite_moment);
}

TEST(FrechetMoments, MonteCarloAgreement)
{
    const auto z = sample(Frechet(1.0, 1.0), 10'000'000, SeededStream{31, 0});
    double s = 0.0;
    for (double v : z) s += std::log2(v);
    EXPECT_NEAR(s / static_cast<double>(z.size()), FrechetMoments(1.0, 1.0).log2_mean(), 0.003);

    // alpha = 2: finite mean, infinite variance, so a loose band.
    const auto z2 = sample(Frechet(2.0, 1.0), 10'000'000, SeededStream{32, 0});
    EXPECT_NEAR(test::mean(z2), std::sqrt(std::numbers::pi), 0.02);
}

// max of n alpha-Frechet draws, times n^{-1/alpha}, is again alpha-Frechet.
TEST(FrechetMoments, MaxStabilityKolmogorovSmirnov)
{
    constexpr std::size_t reps = 100'000;
    for (double alpha : {0.5, 1.5}) {
        for (std::size_t n : {2u, 16u}) {
            Rng rng(SeededStream{77, n});
            std::vector<double> maxima(reps);
            for (auto& m : maxima) {
                double best = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    best = std::max(best, frechet_quantile(alpha, 1.0, rng.uniform()));
                }
                m = best * std::pow(static_cast<double>(n), -1.0 / alpha);
            }
            const auto direct = sample(Frechet(alpha, 1.0), reps, SeededStream{78, n});
            EXPECT_LT(test::ks_two_sample(maxima, direct), test::ks_two_sample_critical(reps, reps))
                << "alpha=" << alpha << " n=" << n;
        }
    }
}

TEST(Distributions, DominantAlpha)
{
    EXPECT_EQ(dominant_alpha(ParetoMixture(0.5, 1.0, 1.0, 2.0, 1.0)), 1.0);
    EXPECT_EQ(dominant_alpha(FrechetMaxProduct(0.5, 1.0, 2.0, 1.0)), 0.5);
    EXPECT_EQ(dominant_alpha(ExpFrechetMixture(0.1, 1.0, 1.0, 5.0)), 1.0);
}
