// Terminating Gauss hypergeometric series and the closed-form radial master
// profile built from it on the complex arc z = 1 - exp(-2i chi).
//
// The profile is
//   f(chi) = (2i sin(chi) e^{-i chi})^{j+1} e^{i omega chi} F(-n, j+1; 2j+2; z)
// with omega = n + 1 + j, where the factor e^{i omega chi} is the exact value
// of (1-z)^{-omega/2}; no branch cuts are ever crossed.
#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "dkmaxwell/matrix10.hpp"

namespace dkmaxwell {
namespace hypergeom {

// 2F1(-n, b; c; z) as a terminating series via the term recurrence
// c_{k+1}/c_k = (k-n)(b+k) / ((c+k)(k+1)).
inline cplx hyp2f1_poly(int n, double b, double c, cplx z) {
    if (n < 0) throw std::invalid_argument("hyp2f1_poly: series order n must be >= 0");
    cplx term{1.0, 0.0};
    cplx sum{};
    cplx zk{1.0, 0.0};
    for (int k = 0; k <= n; ++k) {
        sum += term * zk;
        term *= cplx{double(k - n) * (b + k) / ((c + k) * (k + 1)), 0.0};
        zk *= z;
    }
    return sum;
}

// d/dz of the terminating series.
inline cplx hyp2f1_poly_dz(int n, double b, double c, cplx z) {
    if (n < 1) return cplx{};
    // F'(-n, b; c; z) = (-n) b / c * F(-(n-1), b+1; c+1; z)
    return cplx{-double(n) * b / c, 0.0} * hyp2f1_poly(n - 1, b + 1.0, c + 1.0, z);
}

// d^2/dz^2 of the terminating series.
inline cplx hyp2f1_poly_dz2(int n, double b, double c, cplx z) {
    if (n < 2) return cplx{};
    const double s = double(n) * (n - 1) * b * (b + 1.0) / (c * (c + 1.0));
    return cplx{s, 0.0} * hyp2f1_poly(n - 2, b + 2.0, c + 2.0, z);
}

namespace detail {

inline void require_mode_indices(int j, int n, double chi) {
    constexpr double pi = 3.14159265358979323846;
    if (j < 1) throw std::invalid_argument("profile: j must be >= 1");
    if (n < 0) throw std::invalid_argument("profile: n must be >= 0");
    if (!(chi > 0.0 && chi < pi)) throw std::domain_error("profile: chi must lie in (0, pi)");
}

// Outer factor A(chi) = (2i sin e^{-i chi})^{j+1} e^{i omega chi} and its
// logarithmic derivative L = (j+1) ctg(chi) + i (omega - j - 1).
struct OuterFactor {
    cplx value;
    cplx log_deriv;
    cplx log_deriv_slope;  // dL/dchi = -(j+1)/sin^2
};

inline OuterFactor outer_factor(int j, int n, double chi) {
    const int omega = n + 1 + j;
    const int p = j + 1;
    const double s = std::sin(chi);
    const cplx i{0.0, 1.0};
    const cplx base = 2.0 * i * s * std::exp(-i * chi);
    cplx pw{1.0, 0.0};
    for (int k = 0; k < p; ++k) pw *= base;
    OuterFactor out;
    out.value = pw * std::exp(i * double(omega) * chi);
    out.log_deriv = cplx{double(p) * std::cos(chi) / s, double(omega - p)};
    out.log_deriv_slope = cplx{-double(p) / (s * s), 0.0};
    return out;
}

}  // namespace detail

// Regular radial master profile for mode indices (j, n); omega = n + 1 + j.
inline cplx profile_f(int j, int n, double chi) {
    detail::require_mode_indices(j, n, chi);
    const cplx z = 1.0 - std::exp(cplx{0.0, -2.0 * chi});
    const auto A = detail::outer_factor(j, n, chi);
    return A.value * hyp2f1_poly(n, double(j + 1), double(2 * j + 2), z);
}

// d f / d chi, fully analytic (product and chain rule; dz/dchi = 2i(1-z)).
inline cplx profile_derivative(int j, int n, double chi) {
    detail::require_mode_indices(j, n, chi);
    const cplx z = 1.0 - std::exp(cplx{0.0, -2.0 * chi});
    const cplx dz = cplx{0.0, 2.0} * (1.0 - z);
    const auto A = detail::outer_factor(j, n, chi);
    const cplx F = hyp2f1_poly(n, double(j + 1), double(2 * j + 2), z);
    const cplx Fp = hyp2f1_poly_dz(n, double(j + 1), double(2 * j + 2), z);
    return A.value * (A.log_deriv * F + Fp * dz);
}

// d^2 f / d chi^2, analytic (independent of the differential equation the
// profile satisfies, so equation residuals built on it are genuine checks).
inline cplx profile_second_derivative(int j, int n, double chi) {
    detail::require_mode_indices(j, n, chi);
    const cplx z = 1.0 - std::exp(cplx{0.0, -2.0 * chi});
    const cplx dz = cplx{0.0, 2.0} * (1.0 - z);
    const cplx d2z = 4.0 * (1.0 - z);
    const auto A = detail::outer_factor(j, n, chi);
    const cplx F = hyp2f1_poly(n, double(j + 1), double(2 * j + 2), z);
    const cplx Fp = hyp2f1_poly_dz(n, double(j + 1), double(2 * j + 2), z);
    const cplx Fpp = hyp2f1_poly_dz2(n, double(j + 1), double(2 * j + 2), z);
    const cplx L = A.log_deriv;
    return A.value * ((L * L + A.log_deriv_slope) * F + 2.0 * L * Fp * dz + Fpp * dz * dz +
                      Fp * d2z);
}

}  // namespace hypergeom
}  // namespace dkmaxwell
