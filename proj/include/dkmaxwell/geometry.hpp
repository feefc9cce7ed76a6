// Static spherical three-space geometry: metric, orthonormal tetrad,
// Christoffel symbols, Ricci rotation coefficients, tetrad divergences, and
// the tetrad connection term entering the wave operator. Closed forms are
// paired with finite-difference oracles derived from the metric alone.
//
// Coordinates are (t, chi, theta, phi) with unit curvature radius and c = 1:
//   ds^2 = dt^2 - dchi^2 - sin^2(chi) (dtheta^2 + sin^2(theta) dphi^2).
#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "dkmaxwell/dkp_algebra.hpp"
#include "dkmaxwell/matrix10.hpp"

namespace dkmaxwell {
namespace geometry {

using Coords = std::array<double, 4>;            // (t, chi, theta, phi)
using Table3 = std::array<std::array<std::array<double, 4>, 4>, 4>;

inline void require_interior(double chi, double theta) {
    constexpr double pi = 3.14159265358979323846;
    if (!(chi > 0.0 && chi < pi) || !(theta > 0.0 && theta < pi))
        throw std::domain_error("geometry: chi and theta must lie in the open interval (0, pi)");
}

// Diagonal of g_{alpha beta}.
inline std::array<double, 4> metric_diag(double chi, double theta) {
    require_interior(chi, theta);
    const double s = std::sin(chi);
    const double st = std::sin(theta);
    return {1.0, -1.0, -s * s, -s * s * st * st};
}

inline double sqrt_minus_g(double chi, double theta) {
    const double s = std::sin(chi);
    return s * s * std::sin(theta);
}

// Tetrad vectors e_(a)^alpha, row a = tetrad label, column alpha = coordinate.
// Legs (1) and (2) span the theta/phi directions, leg (3) the radial one.
inline std::array<std::array<double, 4>, 4> tetrad_at(double chi, double theta) {
    require_interior(chi, theta);
    const double s = std::sin(chi);
    const double st = std::sin(theta);
    return {{{1.0, 0.0, 0.0, 0.0},
             {0.0, 0.0, 1.0 / s, 0.0},
             {0.0, 0.0, 0.0, 1.0 / (s * st)},
             {0.0, 1.0, 0.0, 0.0}}};
}

// The coordinate-index-lowered tetrad e_(a)beta = g_{beta beta} e_(a)^beta.
inline std::array<std::array<double, 4>, 4> tetrad_lowered_at(double chi, double theta) {
    const auto g = metric_diag(chi, theta);
    auto e = tetrad_at(chi, theta);
    for (int a = 0; a < 4; ++a)
        for (int al = 0; al < 4; ++al) e[a][al] *= g[al];
    return e;
}

// Christoffel symbols Gamma^mu_{alpha beta}; exactly six index families are
// nonzero for this metric.
inline Table3 christoffel_at(double chi, double theta) {
    require_interior(chi, theta);
    Table3 g{};
    const double s = std::sin(chi), c = std::cos(chi);
    const double st = std::sin(theta), ct = std::cos(theta);
    g[1][2][2] = -s * c;
    g[1][3][3] = -s * c * st * st;
    g[2][1][2] = g[2][2][1] = c / s;
    g[2][3][3] = -st * ct;
    g[3][1][3] = g[3][3][1] = c / s;
    g[3][2][3] = g[3][3][2] = ct / st;
    return g;
}

namespace detail {

// Central difference with one Richardson refinement step.
template <class Fn>
double richardson_diff(const Fn& f, double x, double h) {
    const double d1 = (f(x + h) - f(x - h)) / (2.0 * h);
    const double d2 = (f(x + h / 2.0) - f(x - h / 2.0)) / h;
    return (4.0 * d2 - d1) / 3.0;
}

inline const double kGeomStep = 1e-5;

// d g_{alpha alpha} / d x^mu at (chi, theta); the metric depends on
// coordinates 1 and 2 only.
inline double metric_partial(int mu, int alpha, double chi, double theta) {
    auto g_of = [&](double c, double t) { return metric_diag(c, t)[alpha]; };
    if (mu == 1) return richardson_diff([&](double c) { return g_of(c, theta); }, chi, kGeomStep);
    if (mu == 2) return richardson_diff([&](double t) { return g_of(chi, t); }, theta, kGeomStep);
    return 0.0;
}

}  // namespace detail

// Finite-difference oracle: Levi-Civita connection assembled from metric
// derivatives only.
inline Table3 christoffel_fd(double chi, double theta) {
    require_interior(chi, theta);
    const auto g = metric_diag(chi, theta);
    Table3 out{};
    for (int mu = 0; mu < 4; ++mu)
        for (int al = 0; al < 4; ++al)
            for (int be = 0; be < 4; ++be) {
                // Diagonal metric: only nu = mu contributes.
                double sum = 0.0;
                if (be == mu) sum += detail::metric_partial(al, mu, chi, theta);
                if (al == mu) sum += detail::metric_partial(be, mu, chi, theta);
                if (al == be) sum -= detail::metric_partial(mu, al, chi, theta);
                out[mu][al][be] = 0.5 / g[mu] * sum;
            }
    return out;
}

// Ricci rotation coefficients gamma_{abc} (all flat labels down); the sign
// convention is fixed by gamma_{abc} = -e_(a)beta;alpha e_(b)^beta e_(c)^alpha.
inline Table3 ricci_rotation_at(double chi, double theta) {
    require_interior(chi, theta);
    Table3 g{};
    const double ctg_chi = std::cos(chi) / std::sin(chi);
    const double ctg_theta_over_s = std::cos(theta) / (std::sin(theta) * std::sin(chi));
    g[1][3][1] = -ctg_chi;
    g[3][1][1] = ctg_chi;
    g[1][2][2] = ctg_theta_over_s;
    g[2][1][2] = -ctg_theta_over_s;
    g[2][3][2] = -ctg_chi;
    g[3][2][2] = ctg_chi;
    return g;
}

// Finite-difference oracle for the rotation coefficients: covariant
// derivative of the lowered tetrad with finite-difference Christoffels.
inline Table3 ricci_rotation_fd(double chi, double theta) {
    require_interior(chi, theta);
    const auto e_up = tetrad_at(chi, theta);
    const auto gam = christoffel_fd(chi, theta);
    // d e_(a)beta / d x^alpha
    auto tetrad_partial = [&](int al, int a, int be) {
        auto comp = [&](double c, double t) { return tetrad_lowered_at(c, t)[a][be]; };
        if (al == 1)
            return detail::richardson_diff([&](double c) { return comp(c, theta); }, chi,
                                           detail::kGeomStep);
        if (al == 2)
            return detail::richardson_diff([&](double t) { return comp(chi, t); }, theta,
                                           detail::kGeomStep);
        return 0.0;
    };
    const auto e_low = tetrad_lowered_at(chi, theta);
    Table3 out{};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c) {
                double sum = 0.0;
                for (int be = 0; be < 4; ++be) {
                    if (e_up[b][be] == 0.0) continue;
                    for (int al = 0; al < 4; ++al) {
                        if (e_up[c][al] == 0.0) continue;
                        double cov = tetrad_partial(al, a, be);
                        for (int mu = 0; mu < 4; ++mu) cov -= gam[mu][be][al] * e_low[a][mu];
                        sum += cov * e_up[b][be] * e_up[c][al];
                    }
                }
                out[a][b][c] = -sum;
            }
    return out;
}

// Divergences of the index-raised tetrad legs e^(a)alpha_;alpha.
inline std::array<double, 4> tetrad_divergence(double chi, double theta) {
    require_interior(chi, theta);
    return {0.0, -std::cos(theta) / (std::sin(theta) * std::sin(chi)), 0.0,
            -2.0 * std::cos(chi) / std::sin(chi)};
}

// Finite-difference oracle via the divergence identity
// e^(a)alpha_;alpha = (1/sqrt(-g)) d_alpha ( sqrt(-g) e^(a)alpha ).
inline std::array<double, 4> tetrad_divergence_fd(double chi, double theta) {
    require_interior(chi, theta);
    std::array<double, 4> out{};
    for (int a = 0; a < 4; ++a) {
        const double eta_aa = dkp::minkowski_eta(a, a);
        auto density = [&](int al, double c, double t) {
            return sqrt_minus_g(c, t) * eta_aa * tetrad_at(c, t)[a][al];
        };
        double sum = 0.0;
        sum += detail::richardson_diff([&](double c) { return density(1, c, theta); }, chi,
                                       detail::kGeomStep);
        sum += detail::richardson_diff([&](double t) { return density(2, chi, t); }, theta,
                                       detail::kGeomStep);
        out[a] = sum / sqrt_minus_g(chi, theta);
    }
    return out;
}

// Max |nabla_mu g_{alpha beta}| with finite-difference metric derivatives and
// the closed-form connection; vanishes iff the connection is metric.
inline double metric_compatibility_residual(double chi, double theta) {
    require_interior(chi, theta);
    const auto g = metric_diag(chi, theta);
    const auto gam = christoffel_at(chi, theta);
    double worst = 0.0;
    for (int mu = 0; mu < 4; ++mu)
        for (int al = 0; al < 4; ++al)
            for (int be = 0; be < 4; ++be) {
                // nabla_mu g_{alpha beta} for a diagonal metric: only the
                // lambda = beta and lambda = alpha connection terms survive.
                const double r = ((al == be) ? detail::metric_partial(mu, al, chi, theta) : 0.0) -
                                 gam[be][al][mu] * g[be] - gam[al][be][mu] * g[al];
                worst = std::max(worst, std::abs(r));
            }
    return worst;
}

// Orthonormality defect max |e_(a)^alpha e_(b)^beta g_{alpha beta} - eta_{ab}|.
inline double orthonormality_residual(double chi, double theta) {
    const auto e = tetrad_at(chi, theta);
    const auto g = metric_diag(chi, theta);
    double worst = 0.0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            double sum = 0.0;
            for (int al = 0; al < 4; ++al) sum += e[a][al] * e[b][al] * g[al];
            worst = std::max(worst, std::abs(sum - dkp::minkowski_eta(a, b)));
        }
    return worst;
}

// Radial tetrad connection term of the wave operator:
//   i ctg(chi) (beta^1 J^31 + beta^2 J^32).
// The chi-independent matrix factor is cached; the theta-dependent remainder
// of the full connection lives in the angular operator.
inline Mat10 connection_term(double chi) {
    constexpr double pi = 3.14159265358979323846;
    if (!(chi > 0.0 && chi < pi))
        throw std::domain_error("connection_term: chi must lie in (0, pi)");
    static const Mat10 unit = dkp::beta(1) * dkp::spin_generator(3, 1) +
                              dkp::beta(2) * dkp::spin_generator(3, 2);
    return cplx{0.0, std::cos(chi) / std::sin(chi)} * unit;
}

// Same object assembled from the general recipe sum_c i beta^c (1/2) J^{ab}
// gamma_{abc}; includes the theta part. Comparing this with connection_term
// plus the explicit theta remainder is the transcription test for the
// specialized form.
inline Mat10 connection_term_general(double chi, double theta) {
    const auto gam = ricci_rotation_at(chi, theta);
    Mat10 out;
    for (int c = 0; c < 4; ++c) {
        Mat10 bc;
        bool any = false;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                if (gam[a][b][c] == 0.0) continue;
                bc = bc + cplx{0.5 * gam[a][b][c], 0.0} * dkp::spin_generator(a, b);
                any = true;
            }
        if (any) out = out + cplx{0.0, 1.0} * (dkp::beta(c) * bc);
    }
    return out;
}

// Theta-dependent remainder i ctg(theta)/sin(chi) beta^2 J^12 that the
// angular operator carries.
inline Mat10 connection_term_theta_part(double chi, double theta) {
    require_interior(chi, theta);
    static const Mat10 unit = dkp::beta(2) * dkp::spin_generator(1, 2);
    const double coef = std::cos(theta) / (std::sin(theta) * std::sin(chi));
    return cplx{0.0, coef} * unit;
}

}  // namespace geometry
}  // namespace dkmaxwell
