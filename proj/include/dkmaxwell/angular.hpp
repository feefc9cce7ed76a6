// Wigner small-d functions, their gradient recurrences, and the angular
// (Sigma) part of the wave operator acting on the separated ansatz.
//
// Convention: the angular factor carried by a wavefunction slot of helicity
// weight sigma is D_sigma(theta) = d^j_{-m, sigma}(theta), with the azimuthal
// phase e^{i m phi} kept as an explicit separate factor throughout.
#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "dkmaxwell/dkp_algebra.hpp"
#include "dkmaxwell/matrix10.hpp"

namespace dkmaxwell {
namespace angular {

inline constexpr int kMaxJ = 20;

// D-function lower index carried by each wavefunction slot (the negative of
// the slot's helicity weight).
inline constexpr std::array<int, kDim> kSlotSigma = {0, -1, 0, 1, -1, 0, 1, -1, 0, 1};

namespace detail {

// log(k!) table, sized for the largest factorial the sum formula touches
// (2*kMaxJ plus slack).
inline double log_factorial(int k) {
    static const std::array<double, 4 * kMaxJ + 2> table = [] {
        std::array<double, 4 * kMaxJ + 2> t{};
        for (std::size_t i = 1; i < t.size(); ++i) t[i] = t[i - 1] + std::log(double(i));
        return t;
    }();
    return table[static_cast<std::size_t>(k)];
}

}  // namespace detail

// Wigner small-d matrix element d^j_{m,sigma}(theta) by the explicit
// factorial sum. Out-of-range magnetic indices give 0 by convention.
inline double wigner_d(int j, int m, int sigma, double theta) {
    if (j < 0 || j > kMaxJ) throw std::invalid_argument("wigner_d: j must be in [0, 20]");
    if (std::abs(m) > j || std::abs(sigma) > j) return 0.0;
    const double half = 0.5 * theta;
    const double c = std::cos(half), s = std::sin(half);
    const double pref = 0.5 * (detail::log_factorial(j + m) + detail::log_factorial(j - m) +
                               detail::log_factorial(j + sigma) + detail::log_factorial(j - sigma));
    const int k_lo = std::max(0, sigma - m);
    const int k_hi = std::min(j + sigma, j - m);
    double total = 0.0;
    for (int k = k_lo; k <= k_hi; ++k) {
        const double ln = pref - detail::log_factorial(j + sigma - k) - detail::log_factorial(k) -
                          detail::log_factorial(j - m - k) - detail::log_factorial(m - sigma + k);
        const double sign = ((m - sigma + k) % 2 == 0) ? 1.0 : -1.0;
        total += sign * std::exp(ln) * std::pow(c, 2 * j + sigma - m - 2 * k) *
                 std::pow(s, m - sigma + 2 * k);
    }
    return total;
}

// Angular factor of an ansatz slot: d^j_{-m, sigma}.
inline double slot_d(int j, int m, int sigma, double theta) {
    return wigner_d(j, -m, sigma, theta);
}

struct WignerTriple {
    double d_minus;  // sigma = -1
    double d_zero;   // sigma =  0
    double d_plus;   // sigma = +1
};

inline WignerTriple wigner_triple(int j, int m, double theta) {
    return {slot_d(j, m, -1, theta), slot_d(j, m, 0, theta), slot_d(j, m, 1, theta)};
}

namespace detail {

inline const double kThetaStep = 1e-4;

// 5-point central first derivative in theta.
template <class Fn>
double dtheta5(const Fn& f, double theta, double h = kThetaStep) {
    return (f(theta - 2 * h) - 8.0 * f(theta - h) + 8.0 * f(theta + h) - f(theta + 2 * h)) /
           (12.0 * h);
}

}  // namespace detail

struct RecurrenceResiduals {
    std::array<double, 6> gradient;    // six single-step relations
    std::array<double, 2> contracted;  // two summed identities
    double max() const {
        double w = 0.0;
        for (double r : gradient) w = std::max(w, std::abs(r));
        for (double r : contracted) w = std::max(w, std::abs(r));
        return w;
    }
};

// Residuals of the gradient recurrences tying D_{-1}, D_0, D_{+1} (and their
// +-2 neighbours) together, with d/dtheta from the finite-difference stencil.
inline RecurrenceResiduals recurrence_residuals(int j, int m, double theta) {
    if (j < 1) throw std::invalid_argument("recurrence_residuals: j must be >= 1");
    if (std::abs(m) > j) throw std::invalid_argument("recurrence_residuals: |m| must be <= j");
    const double q = std::sqrt(double(j) * (j + 1));
    const double a = std::sqrt(double(j - 1) * (j + 2));
    const double dm2 = slot_d(j, m, -2, theta), dm1 = slot_d(j, m, -1, theta);
    const double d0 = slot_d(j, m, 0, theta);
    const double dp1 = slot_d(j, m, 1, theta), dp2 = slot_d(j, m, 2, theta);
    const double ddm1 = detail::dtheta5([&](double t) { return slot_d(j, m, -1, t); }, theta);
    const double dd0 = detail::dtheta5([&](double t) { return slot_d(j, m, 0, t); }, theta);
    const double ddp1 = detail::dtheta5([&](double t) { return slot_d(j, m, 1, t); }, theta);
    const double st = std::sin(theta), ct = std::cos(theta);
    RecurrenceResiduals out{};
    out.gradient[0] = ddm1 - 0.5 * (a * dm2 - q * d0);
    out.gradient[1] = (-m + ct) / st * dm1 - 0.5 * (-a * dm2 - q * d0);
    out.gradient[2] = dd0 - 0.5 * q * (dm1 - dp1);
    out.gradient[3] = (-m) / st * d0 - 0.5 * q * (-dm1 - dp1);
    out.gradient[4] = ddp1 - 0.5 * (q * d0 - a * dp2);
    out.gradient[5] = (-m - ct) / st * dp1 - 0.5 * (-q * d0 - a * dp2);
    out.contracted[0] = (-m + ct) / st * dm1 + ddm1 + q * d0;
    out.contracted[1] = (m + ct) / st * dp1 + ddp1 - q * d0;
    return out;
}

// Closed-form action of the angular operator
//   Sigma = i beta^1 d_theta + beta^2 (i d_phi + i J^12 cos(theta)) / sin(theta)
// on the separated ansatz with radial slot values f. The recurrences collapse
// every slot onto the nu = sqrt(j(j+1)/2) combinations below.
inline Vec10 sigma_apply(const Vec10& f, int j, int m, double theta) {
    if (j < 0 || std::abs(m) > j) throw std::invalid_argument("sigma_apply: need |m| <= j, j >= 0");
    if (j == 0) {
        for (std::size_t k = 0; k < kDim; ++k)
            if (kSlotSigma[k] != 0 && f[k] != cplx{})
                throw std::invalid_argument(
                    "sigma_apply: j = 0 admits no helicity +-1 slot content");
    }
    const double nu = std::sqrt(0.5 * double(j) * (j + 1));
    const auto [dm1, d0, dp1] = wigner_triple(j, m, theta);
    const cplx i{0.0, 1.0};
    Vec10 out{};
    out[0] = -(f[4] + f[6]) * d0;
    out[1] = i * f[8] * dm1;
    out[2] = i * (-f[7] + f[9]) * d0;
    out[3] = -i * f[8] * dp1;
    out[4] = f[0] * dm1;
    out[5] = 0.0;
    out[6] = f[0] * dp1;
    out[7] = -i * f[2] * dm1;
    out[8] = i * (f[1] - f[3]) * d0;
    out[9] = i * f[2] * dp1;
    for (cplx& v : out) v *= nu;
    return out;
}

// Oracle for sigma_apply: apply the operator literally, with matrices from
// the algebra module, d_theta from the finite-difference stencil, and
// d_phi -> i m on the explicit azimuthal phase.
inline Vec10 sigma_apply_direct(const Vec10& f, int j, int m, double theta) {
    const auto& w = dkp::helicity_weights();
    auto slot_values = [&](double t) {
        Vec10 v{};
        for (std::size_t k = 0; k < kDim; ++k) v[k] = f[k] * slot_d(j, m, kSlotSigma[k], t);
        return v;
    };
    const Vec10 phi = slot_values(theta);
    Vec10 dphi{};
    {
        const double h = detail::kThetaStep;
        const Vec10 a = slot_values(theta - 2 * h), b = slot_values(theta - h);
        const Vec10 c = slot_values(theta + h), d = slot_values(theta + 2 * h);
        for (std::size_t k = 0; k < kDim; ++k)
            dphi[k] = (a[k] - 8.0 * b[k] + 8.0 * c[k] - d[k]) / (12.0 * h);
    }
    const double st = std::sin(theta), ct = std::cos(theta);
    Vec10 angular{};
    for (std::size_t k = 0; k < kDim; ++k)
        angular[k] = ((-double(m)) + w[k] * ct) / st * phi[k];
    const Vec10 t1 = dkp::beta(1) * dphi;
    const Vec10 t2 = dkp::beta(2) * angular;
    Vec10 out{};
    const cplx i{0.0, 1.0};
    for (std::size_t k = 0; k < kDim; ++k) out[k] = i * t1[k] + t2[k];
    return out;
}

namespace detail {

struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Gauss-Legendre rule on [-1, 1] by Newton iteration on the Legendre
// recurrence; 32 nodes integrate every product arising below exactly.
inline const GaussRule& gauss_legendre_32() {
    static const GaussRule rule = [] {
        constexpr int n = 32;
        GaussRule r;
        r.nodes.resize(n);
        r.weights.resize(n);
        constexpr double pi = 3.14159265358979323846;
        for (int i = 0; i < (n + 1) / 2; ++i) {
            double x = std::cos(pi * (i + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = x;
                for (int k = 2; k <= n; ++k) {
                    const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-15) break;
            }
            r.nodes[i] = -x;
            r.nodes[n - 1 - i] = x;
            const double w = 2.0 / ((1.0 - x * x) * dp * dp);
            r.weights[i] = w;
            r.weights[n - 1 - i] = w;
        }
        return r;
    }();
    return rule;
}

}  // namespace detail

// Integral of d^j_{m,sigma} d^{j'}_{m,sigma} sin(theta) over [0, pi];
// equals 2/(2j+1) delta_{j j'}.
inline double orthogonality_integral(int j, int jp, int m, int sigma) {
    const auto& rule = detail::gauss_legendre_32();
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double theta = std::acos(rule.nodes[i]);
        sum += rule.weights[i] * wigner_d(j, m, sigma, theta) * wigner_d(jp, m, sigma, theta);
    }
    return sum;
}

}  // namespace angular
}  // namespace dkmaxwell
