#include "dkmaxwell/geometry.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dkmaxwell/dkp_algebra.hpp"

namespace dk = dkmaxwell;
namespace geo = dkmaxwell::geometry;
using dk::cplx;
using dk::Mat10;

namespace {
constexpr double kPi = 3.14159265358979323846;

double table_max_diff(const geo::Table3& a, const geo::Table3& b) {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) worst = std::max(worst, std::abs(a[i][j][k] - b[i][j][k]));
    return worst;
}
}  // namespace

TEST(Geometry, MetricDiagonalAndVolume) {
    const double chi = 0.7, theta = 1.1;
    const auto g = geo::metric_diag(chi, theta);
    EXPECT_DOUBLE_EQ(g[0], 1.0);
    EXPECT_DOUBLE_EQ(g[1], -1.0);
    EXPECT_DOUBLE_EQ(g[2], -std::sin(chi) * std::sin(chi));
    EXPECT_DOUBLE_EQ(g[3], -std::sin(chi) * std::sin(chi) * std::sin(theta) * std::sin(theta));
    EXPECT_DOUBLE_EQ(geo::sqrt_minus_g(chi, theta),
                     std::sin(chi) * std::sin(chi) * std::sin(theta));
}

TEST(Geometry, TetradOrthonormality) {
    for (double chi : {0.3, 1.0, 2.5})
        for (double theta : {0.4, 1.3, 2.8})
            EXPECT_LE(geo::orthonormality_residual(chi, theta), 1e-12);
}

TEST(Geometry, ChristoffelClosedFormValues) {
    const double chi = 0.7, theta = 1.1;
    const auto gamma = geo::christoffel_at(chi, theta);
    // coordinate order (t, chi, theta, phi)
    EXPECT_DOUBLE_EQ(gamma[1][2][2], -std::sin(chi) * std::cos(chi));
    EXPECT_DOUBLE_EQ(gamma[1][3][3],
                     -std::sin(chi) * std::cos(chi) * std::sin(theta) * std::sin(theta));
    EXPECT_DOUBLE_EQ(gamma[2][1][2], std::cos(chi) / std::sin(chi));
    EXPECT_DOUBLE_EQ(gamma[2][3][3], -std::sin(theta) * std::cos(theta));
    EXPECT_DOUBLE_EQ(gamma[3][1][3], std::cos(chi) / std::sin(chi));
    EXPECT_DOUBLE_EQ(gamma[3][2][3], std::cos(theta) / std::sin(theta));
    // symmetric in the lower pair
    EXPECT_DOUBLE_EQ(gamma[2][2][1], gamma[2][1][2]);
    // no time components
    for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) EXPECT_EQ(gamma[0][j][k], 0.0);
}

TEST(Geometry, ChristoffelMatchesFiniteDifference) {
    std::mt19937 rng(20240817u);
    std::uniform_real_distribution<double> angle(0.15, kPi - 0.15);
    for (int p = 0; p < 20; ++p) {
        const double chi = angle(rng), theta = angle(rng);
        EXPECT_LE(table_max_diff(geo::christoffel_at(chi, theta), geo::christoffel_fd(chi, theta)),
                  1e-8)
            << "chi=" << chi << " theta=" << theta;
    }
}

TEST(Geometry, RotationCoefficientsClosedFormValues) {
    const double chi = 0.9, theta = 0.8;
    const auto rot = geo::ricci_rotation_at(chi, theta);
    const double ctg_chi = std::cos(chi) / std::sin(chi);
    const double ctg_theta = std::cos(theta) / std::sin(theta);
    EXPECT_NEAR(rot[1][3][1], -ctg_chi, 1e-14);
    EXPECT_NEAR(rot[3][1][1], ctg_chi, 1e-14);
    EXPECT_NEAR(rot[1][2][2], ctg_theta / std::sin(chi), 1e-14);
    EXPECT_NEAR(rot[2][1][2], -ctg_theta / std::sin(chi), 1e-14);
    EXPECT_NEAR(rot[2][3][2], -ctg_chi, 1e-14);
    EXPECT_NEAR(rot[3][2][2], ctg_chi, 1e-14);
}

TEST(Geometry, RotationCoefficientsMatchFiniteDifference) {
    std::mt19937 rng(90210u);
    std::uniform_real_distribution<double> angle(0.15, kPi - 0.15);
    for (int p = 0; p < 20; ++p) {
        const double chi = angle(rng), theta = angle(rng);
        EXPECT_LE(
            table_max_diff(geo::ricci_rotation_at(chi, theta), geo::ricci_rotation_fd(chi, theta)),
            1e-8)
            << "chi=" << chi << " theta=" << theta;
    }
}

TEST(Geometry, TetradDivergenceMatchesFiniteDifference) {
    std::mt19937 rng(5150u);
    std::uniform_real_distribution<double> angle(0.15, kPi - 0.15);
    for (int p = 0; p < 20; ++p) {
        const double chi = angle(rng), theta = angle(rng);
        const auto closed = geo::tetrad_divergence(chi, theta);
        const auto fd = geo::tetrad_divergence_fd(chi, theta);
        for (int a = 0; a < 4; ++a) EXPECT_NEAR(closed[a], fd[a], 1e-8) << "leg " << a;
    }
    const auto closed = geo::tetrad_divergence(0.6, 1.2);
    EXPECT_DOUBLE_EQ(closed[0], 0.0);
    EXPECT_DOUBLE_EQ(closed[1], -std::cos(1.2) / std::sin(1.2) / std::sin(0.6));
    EXPECT_DOUBLE_EQ(closed[2], 0.0);
    EXPECT_DOUBLE_EQ(closed[3], -2.0 * std::cos(0.6) / std::sin(0.6));
}

TEST(Geometry, MetricCompatibility) {
    std::mt19937 rng(31337u);
    std::uniform_real_distribution<double> angle(0.2, kPi - 0.2);
    for (int p = 0; p < 10; ++p)
        EXPECT_LE(geo::metric_compatibility_residual(angle(rng), angle(rng)), 1e-8);
}

TEST(Geometry, ConnectionTermEntriesAndScaling) {
    const double chi = 0.9;
    const Mat10 ct = geo::connection_term(chi);
    const double ctg = std::cos(chi) / std::sin(chi);
    // i * ctg * M with M(0,5) = 2i gives a real entry -2 ctg.
    EXPECT_NEAR(ct(0, 5).real(), -2.0 * ctg, 1e-14);
    EXPECT_NEAR(ct(0, 5).imag(), 0.0, 1e-14);
    EXPECT_NEAR(ct(1, 7).imag(), ctg, 1e-14);
    EXPECT_NEAR(ct(3, 9).imag(), -ctg, 1e-14);
    EXPECT_NEAR(ct(7, 1).imag(), -ctg, 1e-14);
    EXPECT_NEAR(ct(9, 3).imag(), ctg, 1e-14);

    // Pure ctg(chi) profile: the unit-coefficient matrix is chi independent.
    const Mat10 a = geo::connection_term(0.5);
    const Mat10 b = geo::connection_term(1.2);
    const double ra = std::cos(0.5) / std::sin(0.5), rb = std::cos(1.2) / std::sin(1.2);
    EXPECT_LE(dk::max_abs_diff(cplx{1.0 / ra, 0.0} * a, cplx{1.0 / rb, 0.0} * b), 1e-13);
}

TEST(Geometry, ConnectionTermAssembly) {
    std::mt19937 rng(777u);
    std::uniform_real_distribution<double> angle(0.2, kPi - 0.2);
    for (int p = 0; p < 10; ++p) {
        const double chi = angle(rng), theta = angle(rng);
        const Mat10 general = geo::connection_term_general(chi, theta);
        const Mat10 split =
            geo::connection_term(chi) + geo::connection_term_theta_part(chi, theta);
        EXPECT_LE(dk::max_abs_diff(general, split), 1e-12) << "chi=" << chi << " theta=" << theta;
    }
}

TEST(Geometry, DomainValidation) {
    EXPECT_THROW(geo::christoffel_at(-0.1, 1.0), std::domain_error);
    EXPECT_THROW(geo::christoffel_at(1.0, kPi + 0.1), std::domain_error);
    EXPECT_THROW(geo::ricci_rotation_at(0.0, 1.0), std::domain_error);
    EXPECT_NO_THROW(geo::christoffel_at(0.5, 0.5));
}
