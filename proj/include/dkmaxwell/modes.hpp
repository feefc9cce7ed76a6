// Explicit standing-wave solutions on the 3-sphere: magnetic- and
// electric-parity mode families built from the hypergeometric radial profile,
// full field samples with angular and phase factors, potential components in
// cyclic and Cartesian bases, gauge residuals, and the residual of the
// first-order matrix wave equation evaluated on a mode.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "dkmaxwell/angular.hpp"
#include "dkmaxwell/dkp_algebra.hpp"
#include "dkmaxwell/geometry.hpp"
#include "dkmaxwell/hypergeom.hpp"
#include "dkmaxwell/matrix10.hpp"
#include "dkmaxwell/radial.hpp"

namespace dkmaxwell {
namespace modes {

enum class WaveKind { kMagnetic, kElectric };

// Quantum numbers and background scales of one standing wave. j is the total
// angular momentum (j >= 1; the wave has no monopole modes), n the radial
// overtone, m the azimuthal projection. rho is the sphere radius and c the
// wave speed; the dimensionless frequency is n + 1 + j.
struct ModeSpec {
    WaveKind kind = WaveKind::kMagnetic;
    int j = 1;
    int n = 0;
    int m = 0;
    double rho = 1.0;
    double c = 1.0;

    int omega_index() const { return n + 1 + j; }
    double omega() const { return double(omega_index()); }
    double omega_physical() const { return c / rho * omega_index(); }
};

inline void validate(const ModeSpec& spec) {
    if (spec.j < 1) throw std::invalid_argument("ModeSpec: j must be >= 1");
    if (spec.n < 0) throw std::invalid_argument("ModeSpec: n must be >= 0");
    if (std::abs(spec.m) > spec.j) throw std::invalid_argument("ModeSpec: |m| must be <= j");
    if (!(spec.rho > 0.0)) throw std::invalid_argument("ModeSpec: rho must be > 0");
    if (!(spec.c > 0.0)) throw std::invalid_argument("ModeSpec: c must be > 0");
}

struct SpectrumEntry {
    int j;
    int n;
    int omega_index;      // dimensionless frequency n + 1 + j
    double omega;         // physical frequency (c / rho)(n + 1 + j)
};

// Frequency table for j = 1..j_max, n = 0..n_max. Both parities share the
// same spectrum, so entries are not labelled by kind.
inline std::vector<SpectrumEntry> spectrum(int j_max, int n_max, double rho = 1.0,
                                           double c = 1.0) {
    if (j_max < 0 || n_max < 0) throw std::invalid_argument("spectrum: ranges must be >= 0");
    if (!(rho > 0.0) || !(c > 0.0)) throw std::invalid_argument("spectrum: scales must be > 0");
    std::vector<SpectrumEntry> out;
    out.reserve(std::size_t(j_max) * (n_max + 1));
    for (int j = 1; j <= j_max; ++j)
        for (int n = 0; n <= n_max; ++n)
            out.push_back({j, n, n + 1 + j, c / rho * (n + 1 + j)});
    return out;
}

namespace detail {

// Magnetic family: a single master profile feeds the transverse potential
// slot, and the remaining nonzero slots follow algebraically. Slots carry
// the f value at +helicity and its negative at -helicity, the magnetic pair
// repeats with one sign flip, and the scalar/longitudinal slots vanish.
inline Vec10 magnetic_amplitudes(int j, int n, double chi) {
    const double w = n + 1 + j;
    const double nu = radial::nu_of_j(j);
    const double s = std::sin(chi), c = std::cos(chi);
    const cplx i{0.0, 1.0};
    const cplx f = hypergeom::profile_f(j, n, chi);
    const cplx fp = hypergeom::profile_derivative(j, n, chi);
    const cplx f2 = f / s;
    const cplx f2p = fp / s - f * c / (s * s);
    const cplx f5 = -i * w * f2;
    const cplx f8 = -i * (f2p + f2 * c / s);
    const cplx f9 = 2.0 * i * nu * f2 / s;
    Vec10 out{};
    out[1] = f2;
    out[3] = -f2;
    out[4] = f5;
    out[6] = -f5;
    out[7] = f8;
    out[8] = f9;
    out[9] = f8;
    return out;
}

inline Vec10 magnetic_derivatives(int j, int n, double chi) {
    const double w = n + 1 + j;
    const double nu = radial::nu_of_j(j);
    const double s = std::sin(chi), c = std::cos(chi);
    const cplx i{0.0, 1.0};
    const cplx f = hypergeom::profile_f(j, n, chi);
    const cplx fp = hypergeom::profile_derivative(j, n, chi);
    const cplx fpp = hypergeom::profile_second_derivative(j, n, chi);
    const cplx f2 = f / s;
    const cplx f2p = fp / s - f * c / (s * s);
    const cplx f2pp = fpp / s - 2.0 * fp * c / (s * s) + f * (2.0 * c * c / (s * s * s) + 1.0 / s);
    const cplx f5p = -i * w * f2p;
    const cplx f8p = -i * (f2pp + f2p * c / s - f2 / (s * s));
    const cplx f9p = 2.0 * i * nu * (f2p / s - f2 * c / (s * s));
    Vec10 out{};
    out[1] = f2p;
    out[3] = -f2p;
    out[4] = f5p;
    out[6] = -f5p;
    out[7] = f8p;
    out[8] = f9p;
    out[9] = f8p;
    return out;
}

// Electric family: the master profile drives the radial electric slot in the
// sin-rescaled variables, and the rest of the chain follows. The transverse
// slots repeat with equal sign and the rescaled magnetic pair with opposite
// sign; the scalar-potential slot and one strength slot vanish identically.
inline Vec10 electric_amplitudes(int j, int n, double chi) {
    const double w = n + 1 + j;
    const double nu = radial::nu_of_j(j);
    const double s = std::sin(chi);
    const cplx i{0.0, 1.0};
    const cplx F8 = hypergeom::profile_f(j, n, chi);
    const cplx F8p = hypergeom::profile_derivative(j, n, chi);
    const cplx F5 = -F8p / w;
    const cplx F6 = 2.0 * nu / w * F8;
    const cplx F2 = -i / (w * w) * F8p;
    const cplx F3 = 2.0 * i * nu / (w * w) * F8 / (s * s);
    const cplx f2 = F2 / s, f3 = F3, f5 = F5 / s, f6 = F6 / (s * s), f8 = F8 / s;
    Vec10 out{};
    out[1] = f2;
    out[2] = f3;
    out[3] = f2;
    out[4] = f5;
    out[5] = f6;
    out[6] = f5;
    out[7] = f8;
    out[9] = -f8;
    return out;
}

inline Vec10 electric_derivatives(int j, int n, double chi) {
    const double w = n + 1 + j;
    const double nu = radial::nu_of_j(j);
    const double s = std::sin(chi), c = std::cos(chi);
    const cplx i{0.0, 1.0};
    const cplx F8 = hypergeom::profile_f(j, n, chi);
    const cplx F8p = hypergeom::profile_derivative(j, n, chi);
    const cplx F8pp = hypergeom::profile_second_derivative(j, n, chi);
    const cplx F5 = -F8p / w, F5p = -F8pp / w;
    const cplx F6 = 2.0 * nu / w * F8, F6p = 2.0 * nu / w * F8p;
    const cplx F2 = -i / (w * w) * F8p, F2p = -i / (w * w) * F8pp;
    const cplx F3p = 2.0 * i * nu / (w * w) * (F8p / (s * s) - 2.0 * F8 * c / (s * s * s));
    const cplx f2p = F2p / s - F2 * c / (s * s);
    const cplx f5p = F5p / s - F5 * c / (s * s);
    const cplx f6p = F6p / (s * s) - 2.0 * F6 * c / (s * s * s);
    const cplx f8p = F8p / s - F8 * c / (s * s);
    Vec10 out{};
    out[1] = f2p;
    out[2] = F3p;
    out[3] = f2p;
    out[4] = f5p;
    out[5] = f6p;
    out[6] = f5p;
    out[7] = f8p;
    out[9] = -f8p;
    return out;
}

}  // namespace detail

// Uniform chi grid on [margin, pi - margin].
inline std::vector<double> chi_grid(int points, double margin = 0.02) {
    if (points < 2) throw std::invalid_argument("chi_grid: need at least 2 points");
    if (!(margin > 0.0 && margin < radial::kPi / 2.0))
        throw std::invalid_argument("chi_grid: margin must lie in (0, pi/2)");
    std::vector<double> out(points);
    const double lo = margin, hi = radial::kPi - margin;
    for (int k = 0; k < points; ++k) out[k] = lo + (hi - lo) * k / double(points - 1);
    return out;
}

// Radial part of one mode: the ten slot amplitudes f_k(chi) and their chi
// derivatives, with an overall complex scale.
class RadialSolution {
public:
    explicit RadialSolution(ModeSpec spec, cplx scale = cplx{1.0, 0.0})
        : spec_(spec), scale_(scale) {
        validate(spec_);
    }

    const ModeSpec& spec() const { return spec_; }
    cplx scale() const { return scale_; }

    Vec10 amplitudes(double chi) const {
        hypergeom::detail::require_mode_indices(spec_.j, spec_.n, chi);
        Vec10 out = spec_.kind == WaveKind::kMagnetic
                        ? detail::magnetic_amplitudes(spec_.j, spec_.n, chi)
                        : detail::electric_amplitudes(spec_.j, spec_.n, chi);
        for (auto& v : out) v *= scale_;
        return out;
    }

    Vec10 derivatives(double chi) const {
        hypergeom::detail::require_mode_indices(spec_.j, spec_.n, chi);
        Vec10 out = spec_.kind == WaveKind::kMagnetic
                        ? detail::magnetic_derivatives(spec_.j, spec_.n, chi)
                        : detail::electric_derivatives(spec_.j, spec_.n, chi);
        for (auto& v : out) v *= scale_;
        return out;
    }

    // Rescale so that the transverse potential amplitude has unit peak
    // magnitude on a uniform grid.
    RadialSolution& normalize(int grid_points = 201, double margin = 0.02) {
        double peak = 0.0;
        for (double chi : chi_grid(grid_points, margin))
            peak = std::max(peak, std::abs(amplitudes(chi)[1]));
        if (peak == 0.0) throw std::runtime_error("normalize: mode vanished on grid");
        scale_ /= peak;
        return *this;
    }

private:
    ModeSpec spec_;
    cplx scale_;
};

inline RadialSolution magnetic_mode(int j, int n, int m = 0, double rho = 1.0, double c = 1.0) {
    return RadialSolution({WaveKind::kMagnetic, j, n, m, rho, c});
}

inline RadialSolution electric_mode(int j, int n, int m = 0, double rho = 1.0, double c = 1.0) {
    return RadialSolution({WaveKind::kElectric, j, n, m, rho, c});
}

inline RadialSolution mode(const ModeSpec& spec) { return RadialSolution(spec); }

struct SpacetimePoint {
    double t = 0.0;
    double chi = radial::kPi / 2.0;
    double theta = radial::kPi / 2.0;
    double phi = 0.0;
};

// Full ten-component field value: time and azimuth phases, radial amplitude,
// and the polar matrix element for each slot's spin weight.
inline Vec10 field_sample(const RadialSolution& sol, const SpacetimePoint& p) {
    const ModeSpec& sp = sol.spec();
    const Vec10 f = sol.amplitudes(p.chi);
    const cplx phase = std::exp(cplx{0.0, -sp.omega_physical() * p.t}) *
                       std::exp(cplx{0.0, double(sp.m) * p.phi});
    Vec10 out{};
    for (std::size_t k = 0; k < kDim; ++k)
        out[k] = phase * f[k] * angular::slot_d(sp.j, sp.m, angular::kSlotSigma[k], p.theta);
    return out;
}

// Map a 4-potential from the cyclic basis (time, +1, 0, -1 helicity) to the
// Cartesian basis (time, x, y, z).
inline std::array<cplx, 4> cyclic_to_cartesian(const std::array<cplx, 4>& cyc) {
    const double r = 1.0 / std::sqrt(2.0);
    const cplx i{0.0, 1.0};
    return {cyc[0],
            -r * cyc[1] + r * cyc[3],
            -i * r * cyc[1] - i * r * cyc[3],
            cyc[2]};
}

struct PotentialSample {
    std::array<cplx, 4> cyclic;     // (A_t, A_{+1}, A_0, A_{-1})
    std::array<cplx, 4> cartesian;  // (A_t, A_x, A_y, A_z)
};

inline PotentialSample potential_sample(const RadialSolution& sol, const SpacetimePoint& p) {
    const Vec10 phi = field_sample(sol, p);
    PotentialSample out;
    out.cyclic = {phi[0], phi[1], phi[2], phi[3]};
    out.cartesian = cyclic_to_cartesian(out.cyclic);
    return out;
}

// Divergence of the potential slots (the Lorentz condition). Vanishes
// identically for magnetic modes and to rounding for electric ones.
inline cplx lorentz_residual(const RadialSolution& sol, double chi) {
    const ModeSpec& sp = sol.spec();
    const double nu = radial::nu_of_j(sp.j);
    const double s = std::sin(chi), ctg = std::cos(chi) / s;
    const cplx i{0.0, 1.0};
    const Vec10 f = sol.amplitudes(chi);
    const Vec10 df = sol.derivatives(chi);
    return -i * sp.omega() * f[0] - (df[2] + 2.0 * ctg * f[2]) - nu / s * (f[1] + f[3]);
}

// The two stationary-gauge conditions: vanishing scalar potential and a
// constrained longitudinal combination.
struct LandauResidual {
    cplx scalar;        // f1
    cplx longitudinal;  // f3' + 2 ctg f3 + 2 nu / sin * f2
};

inline LandauResidual landau_residual(const RadialSolution& sol, double chi) {
    const ModeSpec& sp = sol.spec();
    const double nu = radial::nu_of_j(sp.j);
    const double s = std::sin(chi), ctg = std::cos(chi) / s;
    const Vec10 f = sol.amplitudes(chi);
    const Vec10 df = sol.derivatives(chi);
    return {f[0], df[2] + 2.0 * ctg * f[2] + 2.0 * nu / s * f[1]};
}

// Residual of the first-order matrix wave equation evaluated on a separated
// ansatz amplitudes(chi)_k * d-function(theta)_k at dimensionless frequency
// omega and azimuthal index m. Radial and polar derivatives are taken by
// five-point finite differences, so the result floor is ~1e-11 on an exact
// mode. The callable form exists so detuned or corrupted amplitudes can be
// fed in as negative controls.
template <typename AmplitudeFn>
inline Vec10 dkp_ansatz_residual(AmplitudeFn&& amplitudes, double omega, int j, int m,
                                 double chi, double theta) {
    constexpr double h = 1e-4;
    const cplx i{0.0, 1.0};
    auto field_at = [&](double c, double th) {
        const Vec10 f = amplitudes(c);
        Vec10 out{};
        for (std::size_t k = 0; k < kDim; ++k)
            out[k] = f[k] * angular::slot_d(j, m, angular::kSlotSigma[k], th);
        return out;
    };
    auto diff5 = [](const Vec10& m2, const Vec10& m1, const Vec10& p1, const Vec10& p2) {
        Vec10 out{};
        for (std::size_t k = 0; k < kDim; ++k)
            out[k] = (m2[k] - 8.0 * m1[k] + 8.0 * p1[k] - p2[k]) / (12.0 * h);
        return out;
    };
    const Vec10 phi = field_at(chi, theta);
    const Vec10 dchi = diff5(field_at(chi - 2 * h, theta), field_at(chi - h, theta),
                             field_at(chi + h, theta), field_at(chi + 2 * h, theta));
    const Vec10 dth = diff5(field_at(chi, theta - 2 * h), field_at(chi, theta - h),
                            field_at(chi, theta + h), field_at(chi, theta + 2 * h));

    const auto& weights = dkp::helicity_weights();
    Vec10 weighted{};
    for (std::size_t k = 0; k < kDim; ++k)
        weighted[k] = (-double(m) + weights[k] * std::cos(theta)) / std::sin(theta) * phi[k];

    const Vec10 time_part = dkp::beta(0) * phi;
    const Vec10 radial_part = dkp::beta(3) * dchi;
    const Vec10 conn_part = geometry::connection_term(chi) * phi;
    const Vec10 polar_part = dkp::beta(1) * dth;
    const Vec10 azimuth_part = dkp::beta(2) * weighted;
    const Vec10 proj_part = dkp::projector_p6() * phi;

    const double s = std::sin(chi);
    Vec10 out{};
    for (std::size_t k = 0; k < kDim; ++k)
        out[k] = omega * time_part[k] + i * radial_part[k] + conn_part[k] +
                 (i * polar_part[k] + azimuth_part[k]) / s - proj_part[k];
    return out;
}

// Equation residual of a constructed mode. detune shifts the frequency used
// by the operator (not the amplitudes), turning an exact solution into a
// controlled non-solution.
inline Vec10 dkp_equation_residual(const RadialSolution& sol, double chi, double theta,
                                   double detune = 0.0) {
    const ModeSpec& sp = sol.spec();
    return dkp_ansatz_residual([&sol](double c) { return sol.amplitudes(c); },
                               sp.omega() + detune, sp.j, sp.m, chi, theta);
}

}  // namespace modes
}  // namespace dkmaxwell
