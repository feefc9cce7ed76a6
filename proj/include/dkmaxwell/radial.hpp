// Radial separation of the wave equation on the 3-sphere: the coupled
// first-order system for the ten slot amplitudes, its parity-reduced
// subsystems, the second-order master equation, the substitution chain down
// to a terminating hypergeometric series, and a shooting oracle for the
// eigenfrequency condition.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dkmaxwell/matrix10.hpp"

namespace dkmaxwell {
namespace radial {

constexpr double kPi = 3.14159265358979323846;

// Angular coupling constant nu = sqrt(j(j+1)/2).
inline double nu_of_j(int j) {
    if (j < 0) throw std::invalid_argument("nu_of_j: j must be >= 0");
    return std::sqrt(0.5 * double(j) * (j + 1));
}

// One radial sample of the separated problem: amplitudes and their chi
// derivatives for all ten slots (derivatives are only consumed for the slots
// that appear differentiated).
struct RadialState {
    double omega;
    int j;
    double chi;
    Vec10 f;
    Vec10 df;
};

// Residuals of the full ten-equation first-order system. Equations are
// ordered by wavefunction slot; a solution makes every component vanish.
inline Vec10 residual_full(const RadialState& st) {
    if (!(st.chi > 0.0 && st.chi < kPi))
        throw std::domain_error("residual_full: chi must lie in (0, pi)");
    const double nu = nu_of_j(st.j);
    const double s = std::sin(st.chi);
    const double ctg = std::cos(st.chi) / s;
    const cplx i{0.0, 1.0};
    const double w = st.omega;
    const Vec10& f = st.f;
    const Vec10& d = st.df;
    Vec10 r{};
    r[0] = -(d[5] + 2.0 * ctg * f[5]) - nu / s * (f[4] + f[6]);
    r[1] = i * w * f[4] + i * (d[7] + ctg * f[7]) + i * nu / s * f[8];
    r[2] = i * w * f[5] + i * nu / s * (-f[7] + f[9]);
    r[3] = i * w * f[6] - i * (d[9] + ctg * f[9]) - i * nu / s * f[8];
    r[4] = -i * w * f[1] + nu / s * f[0] - f[4];
    r[5] = -i * w * f[2] - d[0] - f[5];
    r[6] = -i * w * f[3] + nu / s * f[0] - f[6];
    r[7] = -i * (d[1] + ctg * f[1]) - i * nu / s * f[2] - f[7];
    r[8] = i * nu / s * (f[1] - f[3]) - f[8];
    r[9] = i * (d[3] + ctg * f[3]) + i * nu / s * f[2] - f[9];
    return r;
}

// Residual of the second-order magnetic master equation
//   (d/dchi + ctg chi)^2 f2 + (omega^2 - j(j+1)/sin^2 chi) f2 = 0
// from caller-supplied derivative values.
inline cplx residual_magnetic(cplx f2, cplx df2, cplx d2f2, double omega, int j, double chi) {
    const double s = std::sin(chi);
    const double ctg = std::cos(chi) / s;
    // (d + ctg)^2 = d^2 + 2 ctg d + (ctg^2 - 1/sin^2) and ctg^2 - 1/sin^2 = -1.
    return d2f2 + 2.0 * ctg * df2 + (omega * omega - 1.0 - double(j) * (j + 1) / (s * s)) * f2;
}

// Residuals of the four-equation magnetic chain (f2, f5, f8, f9 active).
inline std::array<cplx, 4> residual_split_magnetic(const RadialState& st) {
    const double nu = nu_of_j(st.j);
    const double s = std::sin(st.chi);
    const double ctg = std::cos(st.chi) / s;
    const cplx i{0.0, 1.0};
    const double w = st.omega;
    const Vec10& f = st.f;
    const Vec10& d = st.df;
    return {i * w * f[4] + i * (d[7] + ctg * f[7]) + i * nu / s * f[8],
            -i * w * f[1] - f[4],
            -i * (d[1] + ctg * f[1]) - f[7],
            2.0 * i * nu / s * f[1] - f[8]};
}

// Residuals of the six-equation electric chain in the gauge with vanishing
// scalar amplitude (f2, f3, f5, f6, f8 active).
inline std::array<cplx, 6> residual_split_electric(const RadialState& st) {
    const double nu = nu_of_j(st.j);
    const double s = std::sin(st.chi);
    const double ctg = std::cos(st.chi) / s;
    const cplx i{0.0, 1.0};
    const double w = st.omega;
    const Vec10& f = st.f;
    const Vec10& d = st.df;
    return {(d[5] + 2.0 * ctg * f[5]) + 2.0 * nu / s * f[4],
            i * w * f[4] + i * (d[7] + ctg * f[7]),
            i * w * f[5] - 2.0 * i * nu / s * f[7],
            -i * w * f[1] - f[4],
            i * w * f[2] + f[5],
            i * (d[1] + ctg * f[1]) + i * nu / s * f[2] + f[7]};
}

// One sample of the sin-rescaled electric variables F = sin(chi) f (and
// F3 = f3, F6 = sin^2 f6), in which the chains lose their 1/tg terms.
struct ElectricMasterState {
    double omega;
    int j;
    double chi;
    cplx F2, F3, F5, F6, F8;
    cplx dF2, dF6, dF8;
};

// Residuals of the rescaled electric system.
inline std::array<cplx, 6> residual_electric_master(const ElectricMasterState& st) {
    const double nu = nu_of_j(st.j);
    const double s = std::sin(st.chi);
    const cplx i{0.0, 1.0};
    const double w = st.omega;
    return {st.dF6 + 2.0 * nu * st.F5,
            w * st.F5 + st.dF8,
            w * st.F6 - 2.0 * nu * st.F8,
            -i * w * st.F2 - st.F5,
            i * w * st.F3 + st.F6 / (s * s),
            i * st.dF2 + i * nu * st.F3 + st.F8};
}

// Substitution linking the magnetic slot amplitude to the master profile:
// f = sin(chi) f2 removes the first-derivative term from the master equation.
inline cplx to_master(cplx f2, double chi) { return std::sin(chi) * f2; }
inline cplx from_master(cplx f, double chi) { return f / std::sin(chi); }

inline std::vector<cplx> to_master(const std::vector<cplx>& f2, const std::vector<double>& chi) {
    if (f2.size() != chi.size()) throw std::invalid_argument("to_master: size mismatch");
    std::vector<cplx> out(f2.size());
    for (std::size_t k = 0; k < f2.size(); ++k) out[k] = to_master(f2[k], chi[k]);
    return out;
}

inline std::vector<cplx> from_master(const std::vector<cplx>& f, const std::vector<double>& chi) {
    if (f.size() != chi.size()) throw std::invalid_argument("from_master: size mismatch");
    std::vector<cplx> out(f.size());
    for (std::size_t k = 0; k < f.size(); ++k) out[k] = from_master(f[k], chi[k]);
    return out;
}

// Complex arc variable z = 1 - e^{-2i chi}; the factored representation
// 2 sin(chi) e^{i(pi/2 - chi)} is checked against it on every call.
inline cplx z_of_chi(double chi) {
    if (!(chi > 0.0 && chi < kPi)) throw std::domain_error("z_of_chi: chi must lie in (0, pi)");
    const cplx z = 1.0 - std::exp(cplx{0.0, -2.0 * chi});
    const cplx factored =
        2.0 * std::sin(chi) * std::exp(cplx{0.0, 0.5 * kPi - chi});
    if (std::abs(z - factored) > 1e-14)
        throw std::logic_error("z_of_chi: representations diverged");
    return z;
}

// Bookkeeping for the reduction of the master equation to the terminating
// hypergeometric series: exponents of the z / (1-z) prefactors and the
// resulting series parameters.
struct HypergeometricReduction {
    double a;           // regular indicial exponent at z = 0, a = j + 1
    double b;           // exponent of (1-z), b = -omega/2
    double alpha;       // series parameter a + b - omega/2 = j + 1 - omega
    double beta;        // series parameter a + b + omega/2 = j + 1
    double gamma;       // series parameter 2a
    std::optional<int> n;  // polynomial order when alpha = -n for integer n >= 0
    bool quantized() const { return n.has_value(); }
};

inline HypergeometricReduction reduction_params(int j, double omega) {
    if (j < 0) throw std::invalid_argument("reduction_params: j must be >= 0");
    if (!(omega > 0.0)) throw std::invalid_argument("reduction_params: omega must be > 0");
    HypergeometricReduction out;
    out.a = double(j + 1);
    out.b = -0.5 * omega;
    out.alpha = out.a + out.b - 0.5 * omega;  // = j + 1 - omega
    out.beta = out.a + out.b + 0.5 * omega;   // = j + 1
    out.gamma = 2.0 * out.a;
    const double n_real = omega - double(j + 1);
    const double n_round = std::round(n_real);
    if (n_round >= 0.0 && std::abs(n_real - n_round) < 1e-9)
        out.n = static_cast<int>(n_round);
    return out;
}

struct ShootResult {
    double indicator;  // |f(pi - chi0)| / max |f| along the integration
    double max_abs;
};

// Regularity shooting oracle for the master equation
//   f'' + (omega^2 - j(j+1)/sin^2 chi) f = 0.
// Integrates the regular branch f ~ sin^{j+1}(chi) from chi0 by fixed-step
// RK4; the far endpoint stays small exactly at the eigenfrequencies.
inline ShootResult shoot_regularity(double omega, int j, int steps = 4000, double chi0 = 0.01) {
    if (j < 1) throw std::invalid_argument("shoot_regularity: j must be >= 1");
    if (steps < 16) throw std::invalid_argument("shoot_regularity: too few steps");
    if (!(chi0 > 0.0 && chi0 < kPi / 2.0))
        throw std::invalid_argument("shoot_regularity: chi0 must lie in (0, pi/2)");
    const double chi1 = kPi - chi0;
    const double h = (chi1 - chi0) / steps;
    auto accel = [&](double chi, double y) {
        const double s = std::sin(chi);
        return -(omega * omega - double(j) * (j + 1) / (s * s)) * y;
    };
    double chi = chi0;
    double y = std::pow(std::sin(chi0), j + 1);
    double yp = double(j + 1) * std::pow(std::sin(chi0), j) * std::cos(chi0);
    double max_abs = std::abs(y);
    for (int k = 0; k < steps; ++k) {
        const double k1y = yp, k1p = accel(chi, y);
        const double k2y = yp + 0.5 * h * k1p, k2p = accel(chi + 0.5 * h, y + 0.5 * h * k1y);
        const double k3y = yp + 0.5 * h * k2p, k3p = accel(chi + 0.5 * h, y + 0.5 * h * k2y);
        const double k4y = yp + h * k3p, k4p = accel(chi + h, y + h * k3y);
        y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
        yp += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
        chi += h;
        max_abs = std::max(max_abs, std::abs(y));
    }
    return {std::abs(y) / max_abs, max_abs};
}

}  // namespace radial
}  // namespace dkmaxwell
