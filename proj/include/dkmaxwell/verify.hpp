// Named self-check suites over the whole library: algebraic identities,
// closed-form versus finite-difference geometry, angular-function relations,
// radial systems on constructed modes, gauge conditions, and the residual of
// the covariant wave equation. Each check reports a measured value against a
// bound; negative controls invert the comparison so that a *small* value is
// the failure.
#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "dkmaxwell/angular.hpp"
#include "dkmaxwell/dkp_algebra.hpp"
#include "dkmaxwell/geometry.hpp"
#include "dkmaxwell/hypergeom.hpp"
#include "dkmaxwell/matrix10.hpp"
#include "dkmaxwell/modes.hpp"
#include "dkmaxwell/radial.hpp"

namespace dkmaxwell {
namespace verify {

struct CheckResult {
    std::string name;
    double value;
    double bound;
    bool lower_bound;  // negative control: pass means value >= bound
    bool pass;
};

using Suite = std::vector<CheckResult>;

inline CheckResult upper(std::string name, double value, double bound) {
    return {std::move(name), value, bound, false, value <= bound};
}

inline CheckResult lower(std::string name, double value, double bound) {
    return {std::move(name), value, bound, true, value >= bound};
}

// Replace bounds by name and recompute pass flags. Unknown keys are ignored
// by design: callers validate their key lists against suite names if needed.
inline void apply_overrides(Suite& suite, const std::map<std::string, double>& overrides) {
    for (auto& check : suite) {
        auto it = overrides.find(check.name);
        if (it == overrides.end()) continue;
        check.bound = it->second;
        check.pass = check.lower_bound ? check.value >= check.bound : check.value <= check.bound;
    }
}

inline bool all_pass(const Suite& suite) {
    return std::all_of(suite.begin(), suite.end(), [](const CheckResult& c) { return c.pass; });
}

// Matrix-algebra identities: the trilinear relation, cube reduction,
// Hermiticity pattern, helicity weights, parity properties.
inline Suite algebra_suite() {
    Suite out;
    out.push_back(upper("algebra.trilinear", dkp::trilinear_residual_max(), 1e-12));

    double cube = 0.0;
    for (int a = 0; a < 4; ++a) {
        const Mat10& b = dkp::beta(a);
        cube = std::max(cube, max_abs_diff(b * b * b, dkp::minkowski_eta(a, a) * b));
    }
    out.push_back(upper("algebra.cube", cube, 1e-12));

    double herm = max_abs_diff(dkp::beta(0).adjoint(), dkp::beta(0));
    for (int a = 1; a < 4; ++a)
        herm = std::max(herm,
                        max_abs_diff(dkp::beta(a).adjoint(), cplx{-1.0, 0.0} * dkp::beta(a)));
    out.push_back(upper("algebra.hermiticity", herm, 1e-12));

    const std::array<double, kDim> expected = {0, 1, 0, -1, 1, 0, -1, 1, 0, -1};
    double wdiff = 0.0;
    const auto& weights = dkp::helicity_weights();
    for (std::size_t k = 0; k < kDim; ++k)
        wdiff = std::max(wdiff, std::abs(weights[k] - expected[k]));
    out.push_back(upper("algebra.helicity-weights", wdiff, 1e-12));

    const Mat10& par = dkp::parity_matrix();
    out.push_back(upper("algebra.parity-involution",
                        max_abs_diff(par * par, Mat10::identity()), 1e-12));

    const Mat10 ij12 = cplx{0.0, 1.0} * dkp::spin_generator(1, 2);
    out.push_back(upper("algebra.parity-reflects-weights",
                        (par * ij12 * par + ij12).max_abs(), 1e-12));

    const Mat10& proj = dkp::projector_p6();
    out.push_back(upper("algebra.projector-idempotent",
                        max_abs_diff(proj * proj, proj), 1e-12));
    return out;
}

// Closed-form geometry against finite-difference recomputation at seeded
// random interior points.
inline Suite geometry_suite(int points = 20, unsigned seed = 20240817u) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> angle(0.15, radial::kPi - 0.15);
    double christ = 0.0, rot = 0.0, divg = 0.0, ortho = 0.0, compat = 0.0, assemble = 0.0;
    for (int p = 0; p < points; ++p) {
        const double chi = angle(rng), theta = angle(rng);
        const auto ga = geometry::christoffel_at(chi, theta);
        const auto gf = geometry::christoffel_fd(chi, theta);
        const auto ra = geometry::ricci_rotation_at(chi, theta);
        const auto rf = geometry::ricci_rotation_fd(chi, theta);
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                for (int c = 0; c < 4; ++c) {
                    christ = std::max(christ, std::abs(ga[a][b][c] - gf[a][b][c]));
                    rot = std::max(rot, std::abs(ra[a][b][c] - rf[a][b][c]));
                }
        const auto da = geometry::tetrad_divergence(chi, theta);
        const auto df = geometry::tetrad_divergence_fd(chi, theta);
        for (int a = 0; a < 4; ++a) divg = std::max(divg, std::abs(da[a] - df[a]));
        ortho = std::max(ortho, geometry::orthonormality_residual(chi, theta));
        compat = std::max(compat, geometry::metric_compatibility_residual(chi, theta));
        assemble = std::max(
            assemble, max_abs_diff(geometry::connection_term_general(chi, theta),
                                   geometry::connection_term(chi) +
                                       geometry::connection_term_theta_part(chi, theta)));
    }
    Suite out;
    out.push_back(upper("geometry.christoffel-fd", christ, 1e-8));
    out.push_back(upper("geometry.rotation-fd", rot, 1e-8));
    out.push_back(upper("geometry.divergence-fd", divg, 1e-8));
    out.push_back(upper("geometry.orthonormality", ortho, 1e-12));
    out.push_back(upper("geometry.metric-compatibility", compat, 1e-8));
    out.push_back(upper("geometry.connection-assembly", assemble, 1e-12));
    return out;
}

// Angular function identities: gradient recurrences, orthogonality, and the
// closed-form polar operator against its matrix finite-difference form.
inline Suite angular_suite(unsigned seed = 7u) {
    double recur = 0.0;
    for (auto [j, m] : {std::pair{1, 0}, {1, 1}, {2, 1}, {2, -2}, {3, 2}, {4, -3}})
        recur = std::max(recur, angular::recurrence_residuals(j, m, 1.1).max());

    double orth = 0.0;
    for (int j = 0; j <= 3; ++j)
        for (int jp = 0; jp <= 3; ++jp)
            for (int m = -std::min(j, jp); m <= std::min(j, jp); ++m)
                for (int sigma = -1; sigma <= 1; ++sigma) {
                    if (std::abs(sigma) > j || std::abs(sigma) > jp) continue;
                    const double val = angular::orthogonality_integral(j, jp, m, sigma);
                    const double want = j == jp ? 2.0 / (2 * j + 1) : 0.0;
                    orth = std::max(orth, std::abs(val - want));
                }

    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double sigma_diff = 0.0;
    for (auto [j, m] : {std::pair{1, 0}, {2, 1}, {3, -2}}) {
        Vec10 f{};
        for (auto& v : f) v = cplx{gauss(rng), gauss(rng)};
        const Vec10 a = angular::sigma_apply(f, j, m, 0.9);
        const Vec10 b = angular::sigma_apply_direct(f, j, m, 0.9);
        for (std::size_t k = 0; k < kDim; ++k)
            sigma_diff = std::max(sigma_diff, std::abs(a[k] - b[k]));
    }

    Suite out;
    out.push_back(upper("angular.recurrences", recur, 1e-6));
    out.push_back(upper("angular.orthogonality", orth, 1e-8));
    out.push_back(upper("angular.sigma-consistency", sigma_diff, 1e-6));
    return out;
}

// Radial systems evaluated on constructed modes, the master-equation
// reduction, and the shooting oracle at tuned and detuned frequencies.
inline Suite radial_suite() {
    double first_mag = 0.0, first_el = 0.0;
    for (int j = 1; j <= 3; ++j)
        for (int n = 0; n <= 2; ++n)
            for (double chi : modes::chi_grid(21, 0.05)) {
                const auto mag = modes::magnetic_mode(j, n);
                const auto el = modes::electric_mode(j, n);
                radial::RadialState st{mag.spec().omega(), j, chi, mag.amplitudes(chi),
                                       mag.derivatives(chi)};
                first_mag = std::max(first_mag, max_abs(radial::residual_full(st)));
                st.f = el.amplitudes(chi);
                st.df = el.derivatives(chi);
                first_el = std::max(first_el, max_abs(radial::residual_full(st)));
            }

    double ode = 0.0;
    for (int j = 1; j <= 4; ++j)
        for (int n = 0; n <= 3; ++n)
            for (double chi : modes::chi_grid(11, 0.1)) {
                const double w = n + 1 + j;
                const cplx r = hypergeom::profile_second_derivative(j, n, chi) +
                               (w * w - double(j) * (j + 1) / std::pow(std::sin(chi), 2)) *
                                   hypergeom::profile_f(j, n, chi);
                ode = std::max(ode, std::abs(r));
            }

    double eigen = 0.0;
    for (auto [j, n] : {std::pair{1, 0}, {1, 1}, {2, 0}})
        eigen = std::max(eigen, radial::shoot_regularity(double(n + 1 + j), j).indicator);
    double detuned = 1.0;
    for (auto [j, w] : {std::pair{1, 2.3}, {2, 4.5}})
        detuned = std::min(detuned, radial::shoot_regularity(w, j).indicator);

    Suite out;
    out.push_back(upper("radial.first-order.magnetic", first_mag, 1e-10));
    out.push_back(upper("radial.first-order.electric", first_el, 1e-10));
    out.push_back(upper("radial.master-ode", ode, 1e-9));
    out.push_back(upper("radial.shooting-eigen", eigen, 1e-3));
    out.push_back(lower("radial.shooting-detuned", detuned, 0.05));
    return out;
}

// Gauge conditions on constructed modes.
inline Suite gauge_suite() {
    double lor_mag = 0.0, lor_el = 0.0, landau_scalar = 0.0, landau_long = 0.0;
    for (int j = 1; j <= 2; ++j)
        for (int n = 0; n <= 1; ++n)
            for (double chi : modes::chi_grid(21, 0.1)) {
                const auto mag = modes::magnetic_mode(j, n);
                const auto el = modes::electric_mode(j, n);
                lor_mag = std::max(lor_mag, std::abs(modes::lorentz_residual(mag, chi)));
                lor_el = std::max(lor_el, std::abs(modes::lorentz_residual(el, chi)));
                const auto landau = modes::landau_residual(el, chi);
                landau_scalar = std::max(landau_scalar, std::abs(landau.scalar));
                landau_long = std::max(landau_long, std::abs(landau.longitudinal));
            }
    Suite out;
    out.push_back(upper("gauge.lorentz-magnetic", lor_mag, 1e-12));
    out.push_back(upper("gauge.lorentz-electric", lor_el, 1e-9));
    out.push_back(upper("gauge.landau-scalar", landau_scalar, 1e-9));
    out.push_back(upper("gauge.landau-longitudinal", landau_long, 1e-9));
    return out;
}

// Residual of the covariant first-order equation on constructed modes at
// seeded random interior points. A nonzero detune shifts the operator
// frequency only; the bounds stay in place, so a detuned run is expected to
// fail — that is how the suite demonstrates it can detect a broken setup.
inline Suite equation_suite(double detune = 0.0, unsigned seed = 3u) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> angle(0.3, radial::kPi - 0.3);
    double worst_mag = 0.0, worst_el = 0.0;
    for (int j = 1; j <= 2; ++j)
        for (int n = 0; n <= 1; ++n) {
            std::uniform_int_distribution<int> mdist(-j, j);
            for (int p = 0; p < 3; ++p) {
                const double chi = angle(rng), theta = angle(rng);
                const int m = mdist(rng);
                const auto mag = modes::magnetic_mode(j, n, m);
                const auto el = modes::electric_mode(j, n, m);
                worst_mag = std::max(
                    worst_mag, max_abs(modes::dkp_equation_residual(mag, chi, theta, detune)));
                worst_el = std::max(
                    worst_el, max_abs(modes::dkp_equation_residual(el, chi, theta, detune)));
            }
        }
    Suite out;
    out.push_back(upper("equation.residual-magnetic", worst_mag, 1e-5));
    out.push_back(upper("equation.residual-electric", worst_el, 1e-5));
    return out;
}

inline Suite full_suite(double detune = 0.0) {
    Suite out = algebra_suite();
    for (auto&& part : {geometry_suite(), angular_suite(), radial_suite(), gauge_suite(),
                        equation_suite(detune)})
        out.insert(out.end(), part.begin(), part.end());
    return out;
}

inline Suite suite_by_name(const std::string& name, double detune = 0.0) {
    if (name == "algebra") return algebra_suite();
    if (name == "geometry") return geometry_suite();
    if (name == "angular") return angular_suite();
    if (name == "radial") return radial_suite();
    if (name == "gauge") return gauge_suite();
    if (name == "equation") return equation_suite(detune);
    if (name == "full") return full_suite(detune);
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace verify
}  // namespace dkmaxwell
