#include "dkmaxwell/hypergeom.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace hg = dkmaxwell::hypergeom;
using dkmaxwell::cplx;

namespace {
constexpr double kPi = 3.14159265358979323846;

// Five-point central difference, matching the accuracy used elsewhere.
template <typename F>
cplx fd5(F f, double x, double h = 1e-4) {
    return (f(x - 2 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2 * h)) / (12.0 * h);
}
}  // namespace

TEST(Hypergeom, TerminatingSeriesKnownValues) {
    // F(-1, 2; 4; z) = 1 - z/2
    for (cplx z : {cplx{0.3, 0.0}, cplx{0.2, -0.7}, cplx{1.5, 0.4}})
        EXPECT_LE(std::abs(hg::hyp2f1_poly(1, 2.0, 4.0, z) - (1.0 - 0.5 * z)), 1e-14);
    // F(-2, 2; 4; 1) = 1 - 1 + 3/10
    EXPECT_NEAR(hg::hyp2f1_poly(2, 2.0, 4.0, cplx{1.0, 0.0}).real(), 0.3, 1e-14);
    EXPECT_NEAR(hg::hyp2f1_poly(2, 2.0, 4.0, cplx{1.0, 0.0}).imag(), 0.0, 1e-14);
    // n = 0 is the constant series.
    EXPECT_EQ(hg::hyp2f1_poly(0, 5.0, 9.0, cplx{2.0, 3.0}), (cplx{1.0, 0.0}));
}

TEST(Hypergeom, SeriesDerivativeIdentities) {
    const cplx z{0.4, -0.3};
    // dF/dz for terminating F(-n, b; c; .) equals (-n)(b)/c * F(-(n-1), b+1; c+1; .)
    for (int n : {1, 2, 3}) {
        const cplx direct = hg::hyp2f1_poly_dz(n, 3.0, 6.0, z);
        const cplx contiguous =
            -double(n) * 3.0 / 6.0 * hg::hyp2f1_poly(n - 1, 4.0, 7.0, z);
        EXPECT_LE(std::abs(direct - contiguous), 1e-13) << "n=" << n;

        const cplx fd = fd5([&](double x) { return hg::hyp2f1_poly(n, 3.0, 6.0, cplx{x, z.imag()}); },
                            z.real());
        EXPECT_LE(std::abs(direct - fd), 1e-9) << "n=" << n;

        const cplx fd2 = fd5(
            [&](double x) { return hg::hyp2f1_poly_dz(n, 3.0, 6.0, cplx{x, z.imag()}); }, z.real());
        EXPECT_LE(std::abs(hg::hyp2f1_poly_dz2(n, 3.0, 6.0, z) - fd2), 1e-9) << "n=" << n;
    }
}

TEST(Hypergeom, ProfileClosedForms) {
    for (double chi = 0.1; chi < kPi; chi += 0.17) {
        const double s = std::sin(chi), c = std::cos(chi);
        EXPECT_LE(std::abs(hg::profile_f(1, 0, chi) - cplx{-4.0 * s * s, 0.0}), 1e-10)
            << "chi=" << chi;
        EXPECT_LE(std::abs(hg::profile_f(1, 1, chi) - cplx{-4.0 * s * s * c, 0.0}), 1e-10)
            << "chi=" << chi;
        EXPECT_LE(std::abs(hg::profile_derivative(1, 0, chi) -
                           cplx{-4.0 * std::sin(2.0 * chi), 0.0}),
                  1e-10)
            << "chi=" << chi;
    }
}

TEST(Hypergeom, ProfileDerivativesMatchFiniteDifference) {
    for (auto [j, n] : {std::pair{1, 0}, {2, 1}, {3, 2}, {4, 3}})
        for (double chi : {0.4, 1.0, 1.9, 2.7}) {
            const cplx dfd = fd5([&](double x) { return hg::profile_f(j, n, x); }, chi);
            EXPECT_LE(std::abs(hg::profile_derivative(j, n, chi) - dfd), 1e-8)
                << "j=" << j << " n=" << n << " chi=" << chi;
            const cplx d2fd = fd5([&](double x) { return hg::profile_derivative(j, n, x); }, chi);
            EXPECT_LE(std::abs(hg::profile_second_derivative(j, n, chi) - d2fd), 1e-7)
                << "j=" << j << " n=" << n << " chi=" << chi;
        }
}

TEST(Hypergeom, ProfileSolvesMasterEquation) {
    for (int j = 1; j <= 4; ++j)
        for (int n = 0; n <= 3; ++n)
            for (double chi = 0.15; chi < kPi - 0.1; chi += 0.3) {
                const double w = n + 1 + j;
                const double s = std::sin(chi);
                const cplx res = hg::profile_second_derivative(j, n, chi) +
                                 (w * w - double(j) * (j + 1) / (s * s)) * hg::profile_f(j, n, chi);
                EXPECT_LE(std::abs(res), 1e-9) << "j=" << j << " n=" << n << " chi=" << chi;
            }
}

TEST(Hypergeom, ProfileIsRealUpToGlobalPhase) {
    for (auto [j, n] : {std::pair{1, 0}, {2, 0}, {2, 2}, {3, 1}, {5, 4}}) {
        const cplx ref = hg::profile_f(j, n, 1.0);
        for (double chi : {0.3, 0.8, 1.7, 2.6}) {
            const cplx v = hg::profile_f(j, n, chi);
            EXPECT_LE(std::abs(std::imag(v * std::conj(ref))),
                      1e-10 * std::max(1.0, std::abs(v) * std::abs(ref)))
                << "j=" << j << " n=" << n << " chi=" << chi;
        }
    }
}

TEST(Hypergeom, BoundaryExponentIsJPlusOne) {
    for (int j : {1, 2, 3}) {
        const double eps = 1e-3;
        const double slope =
            std::log(std::abs(hg::profile_f(j, 1, 2.0 * eps)) /
                     std::abs(hg::profile_f(j, 1, eps))) /
            std::log(2.0);
        EXPECT_NEAR(slope, double(j + 1), 0.05) << "j=" << j;
    }
}

TEST(Hypergeom, IndexValidation) {
    EXPECT_THROW(hg::profile_f(0, 0, 1.0), std::invalid_argument);
    EXPECT_THROW(hg::profile_f(1, -1, 1.0), std::invalid_argument);
    EXPECT_THROW(hg::profile_f(1, 0, 0.0), std::domain_error);
    EXPECT_THROW(hg::profile_f(1, 0, kPi), std::domain_error);
}
