#include "dkmaxwell/radial.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "dkmaxwell/hypergeom.hpp"
#include "dkmaxwell/modes.hpp"

namespace dk = dkmaxwell;
namespace rad = dkmaxwell::radial;
using dk::cplx;
using dk::Vec10;

namespace {
constexpr double kPi = 3.14159265358979323846;

rad::RadialState state_of(const dk::modes::RadialSolution& sol, double chi) {
    return {sol.spec().omega(), sol.spec().j, chi, sol.amplitudes(chi), sol.derivatives(chi)};
}
}  // namespace

TEST(Radial, CouplingConstant) {
    EXPECT_DOUBLE_EQ(rad::nu_of_j(0), 0.0);
    EXPECT_DOUBLE_EQ(rad::nu_of_j(1), 1.0);
    EXPECT_DOUBLE_EQ(rad::nu_of_j(2), std::sqrt(3.0));
    EXPECT_DOUBLE_EQ(rad::nu_of_j(3), std::sqrt(6.0));
    EXPECT_THROW(rad::nu_of_j(-1), std::invalid_argument);
}

TEST(Radial, MasterResidualOnFundamental) {
    // f2 = sin(chi) solves the j = 1 master form at omega = 2 and misses it
    // by (omega^2 - 4) sin(chi) otherwise.
    for (double chi : {0.3, 0.9, 1.7, 2.8}) {
        const cplx f2{std::sin(chi), 0.0};
        const cplx df2{std::cos(chi), 0.0};
        const cplx d2f2{-std::sin(chi), 0.0};
        EXPECT_LE(std::abs(rad::residual_magnetic(f2, df2, d2f2, 2.0, 1, chi)), 1e-13);
        EXPECT_NEAR(std::abs(rad::residual_magnetic(f2, df2, d2f2, 2.5, 1, chi)),
                    2.25 * std::sin(chi), 1e-12);
    }
}

TEST(Radial, ArcVariable) {
    const cplx z_half = rad::z_of_chi(kPi / 2.0);
    EXPECT_NEAR(z_half.real(), 2.0, 1e-14);
    EXPECT_NEAR(z_half.imag(), 0.0, 1e-14);
    const cplx z_quarter = rad::z_of_chi(kPi / 4.0);
    EXPECT_NEAR(z_quarter.real(), 1.0, 1e-14);
    EXPECT_NEAR(z_quarter.imag(), 1.0, 1e-14);
    EXPECT_THROW(rad::z_of_chi(0.0), std::domain_error);
    EXPECT_THROW(rad::z_of_chi(kPi), std::domain_error);
}

TEST(Radial, ReductionParameters) {
    const auto r = rad::reduction_params(1, 2.0);
    EXPECT_DOUBLE_EQ(r.a, 2.0);
    EXPECT_DOUBLE_EQ(r.b, -1.0);
    EXPECT_DOUBLE_EQ(r.alpha, 0.0);
    EXPECT_DOUBLE_EQ(r.beta, 2.0);
    EXPECT_DOUBLE_EQ(r.gamma, 4.0);
    ASSERT_TRUE(r.quantized());
    EXPECT_EQ(*r.n, 0);

    // Parameter invariants hold on and off the spectrum.
    for (int j : {1, 2, 3})
        for (double omega : {2.0, 3.5, 4.0, 6.283}) {
            const auto p = rad::reduction_params(j, omega);
            EXPECT_NEAR(p.alpha + p.beta, 2.0 * (p.a + p.b), 1e-12);
            EXPECT_NEAR(p.alpha * p.beta,
                        (p.a + p.b) * (p.a + p.b) - 0.25 * omega * omega, 1e-12);
            EXPECT_EQ(p.quantized(), omega - (j + 1) >= 0 &&
                                         std::abs(omega - std::round(omega)) < 1e-9);
        }

    EXPECT_FALSE(rad::reduction_params(3, 2.0).quantized());  // omega below the band
    EXPECT_THROW(rad::reduction_params(-1, 2.0), std::invalid_argument);
    EXPECT_THROW(rad::reduction_params(1, 0.0), std::invalid_argument);
}

TEST(Radial, MasterSubstitutionRoundTrip) {
    const std::vector<double> grid = dk::modes::chi_grid(17, 0.1);
    std::vector<cplx> f2(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k)
        f2[k] = cplx{std::cos(grid[k]), 0.3 * std::sin(2.0 * grid[k])};
    const auto f = rad::to_master(f2, grid);
    const auto back = rad::from_master(f, grid);
    for (std::size_t k = 0; k < grid.size(); ++k) {
        EXPECT_LE(std::abs(f[k] - std::sin(grid[k]) * f2[k]), 1e-15);
        EXPECT_LE(std::abs(back[k] - f2[k]), 1e-14);
    }
    EXPECT_THROW(rad::to_master(f2, std::vector<double>(3, 1.0)), std::invalid_argument);
}

TEST(Radial, FullSystemVanishesOnConstructedModes) {
    for (int j = 1; j <= 3; ++j)
        for (int n = 0; n <= 2; ++n) {
            const auto mag = dk::modes::magnetic_mode(j, n);
            const auto ele = dk::modes::electric_mode(j, n);
            for (double chi : dk::modes::chi_grid(21, 0.05)) {
                EXPECT_LE(dk::max_abs(rad::residual_full(state_of(mag, chi))), 1e-10)
                    << "magnetic j=" << j << " n=" << n << " chi=" << chi;
                EXPECT_LE(dk::max_abs(rad::residual_full(state_of(ele, chi))), 1e-10)
                    << "electric j=" << j << " n=" << n << " chi=" << chi;
            }
        }
}

TEST(Radial, SplitSystemsVanishOnTheirFamilies) {
    for (int j = 1; j <= 3; ++j)
        for (int n = 0; n <= 2; ++n)
            for (double chi : dk::modes::chi_grid(13, 0.1)) {
                const auto mag = state_of(dk::modes::magnetic_mode(j, n), chi);
                for (const cplx& r : rad::residual_split_magnetic(mag))
                    EXPECT_LE(std::abs(r), 1e-10) << "magnetic j=" << j << " n=" << n;

                const auto ele = state_of(dk::modes::electric_mode(j, n), chi);
                for (const cplx& r : rad::residual_split_electric(ele))
                    EXPECT_LE(std::abs(r), 1e-10) << "electric j=" << j << " n=" << n;
            }
}

TEST(Radial, RescaledElectricSystem) {
    namespace hg = dk::hypergeom;
    for (int j = 1; j <= 3; ++j)
        for (int n = 0; n <= 2; ++n)
            for (double chi : dk::modes::chi_grid(13, 0.1)) {
                const double w = n + 1 + j;
                const double nu = rad::nu_of_j(j);
                const double s = std::sin(chi);
                const cplx i{0.0, 1.0};
                const cplx F8 = hg::profile_f(j, n, chi);
                const cplx F8p = hg::profile_derivative(j, n, chi);
                const cplx F8pp = hg::profile_second_derivative(j, n, chi);
                rad::ElectricMasterState st;
                st.omega = w;
                st.j = j;
                st.chi = chi;
                st.F8 = F8;
                st.F5 = -F8p / w;
                st.F6 = 2.0 * nu / w * F8;
                st.F2 = -i / (w * w) * F8p;
                st.F3 = 2.0 * i * nu / (w * w) * F8 / (s * s);
                st.dF8 = F8p;
                st.dF6 = 2.0 * nu / w * F8p;
                st.dF2 = -i / (w * w) * F8pp;
                for (const cplx& r : rad::residual_electric_master(st))
                    EXPECT_LE(std::abs(r), 1e-10) << "j=" << j << " n=" << n << " chi=" << chi;
            }
}

TEST(Radial, ShootingFindsEigenfrequencies) {
    for (int j = 1; j <= 3; ++j)
        for (int n = 0; n <= 2; ++n) {
            const double omega = n + 1 + j;
            EXPECT_LE(rad::shoot_regularity(omega, j).indicator, 1e-3)
                << "j=" << j << " n=" << n;
        }
}

TEST(Radial, ShootingRejectsDetunedFrequencies) {
    for (auto [j, omega] : {std::pair{1, 2.3}, {1, 2.5}, {2, 4.5}, {3, 4.7}})
        EXPECT_GE(rad::shoot_regularity(omega, j).indicator, 0.05)
            << "j=" << j << " omega=" << omega;
}

TEST(Radial, ShootingIndicatorHasLocalMinimumAtEigenfrequency) {
    const double at = rad::shoot_regularity(2.0, 1).indicator;
    EXPECT_LT(at, rad::shoot_regularity(1.95, 1).indicator);
    EXPECT_LT(at, rad::shoot_regularity(2.05, 1).indicator);
}

TEST(Radial, ShootingStableUnderStartPointHalving) {
    EXPECT_LE(rad::shoot_regularity(2.0, 1, 4000, 0.005).indicator, 1e-3);
    EXPECT_LE(rad::shoot_regularity(4.0, 2, 8000, 0.005).indicator, 1e-3);
}

TEST(Radial, ShootingValidation) {
    EXPECT_THROW(rad::shoot_regularity(2.0, 0), std::invalid_argument);
    EXPECT_THROW(rad::shoot_regularity(2.0, 1, 8), std::invalid_argument);
    EXPECT_THROW(rad::shoot_regularity(2.0, 1, 4000, 2.0), std::invalid_argument);
}

TEST(Radial, FullSystemDomainValidation) {
    rad::RadialState st{2.0, 1, 0.0, Vec10{}, Vec10{}};
    EXPECT_THROW(rad::residual_full(st), std::domain_error);
}
