// Duffin-Kemmer beta matrices (10-dimensional massless vector representation)
// in the cyclic (helicity) basis, spin generators, the field-strength
// projector, and the spatial-inversion matrix.
//
// Component layout of the wavefunction:
//   slot 0      : scalar potential
//   slots 1..3  : vector potential, helicity (+1, 0, -1)
//   slots 4..6  : electric-type strengths, helicity (+1, 0, -1)
//   slots 7..9  : magnetic-type strengths, helicity (+1, 0, -1)
#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "dkmaxwell/matrix10.hpp"

namespace dkmaxwell {
namespace dkp {

// Shared by the matrix builders and any fixture that wants representation-level
// equality with them.
inline const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// Flat metric signature (+,-,-,-).
inline double minkowski_eta(int a, int b) {
    if (a != b) return 0.0;
    return a == 0 ? 1.0 : -1.0;
}

namespace detail {

struct Entry {
    int r, c;
    cplx v;
};

template <std::size_t N>
Mat10 from_entries(const std::array<Entry, N>& entries) {
    Mat10 m;
    for (const Entry& e : entries) m(e.r, e.c) = e.v;
    return m;
}

inline Mat10 build_beta(int a) {
    const cplx i{0.0, 1.0};
    const double r = kInvSqrt2;
    switch (a) {
        case 0:
            return from_entries<6>({{{1, 4, i},
                                     {2, 5, i},
                                     {3, 6, i},
                                     {4, 1, -i},
                                     {5, 2, -i},
                                     {6, 3, -i}}});
        case 1:
            return from_entries<12>({{{0, 4, -i * r},
                                      {0, 6, i * r},
                                      {1, 8, r},
                                      {2, 7, r},
                                      {2, 9, r},
                                      {3, 8, r},
                                      {4, 0, -i * r},
                                      {6, 0, i * r},
                                      {7, 2, -r},
                                      {8, 1, -r},
                                      {8, 3, -r},
                                      {9, 2, -r}}});
        case 2:
            return from_entries<12>({{{0, 4, r},
                                      {0, 6, r},
                                      {1, 8, -i * r},
                                      {2, 7, i * r},
                                      {2, 9, -i * r},
                                      {3, 8, i * r},
                                      {4, 0, -r},
                                      {6, 0, -r},
                                      {7, 2, i * r},
                                      {8, 1, -i * r},
                                      {8, 3, i * r},
                                      {9, 2, -i * r}}});
        case 3:
            return from_entries<6>({{{0, 5, i},
                                     {1, 7, 1.0},
                                     {3, 9, -1.0},
                                     {5, 0, i},
                                     {7, 1, -1.0},
                                     {9, 3, 1.0}}});
        default:
            throw std::invalid_argument("beta: tetrad index must be in {0,1,2,3}");
    }
}

}  // namespace detail

// beta^a for a in {0,1,2,3}. beta^0 is Hermitian, the spatial ones are
// anti-Hermitian; all four satisfy the trilinear algebra checked below.
inline const Mat10& beta(int a) {
    static const std::array<Mat10, 4> cache = {detail::build_beta(0), detail::build_beta(1),
                                               detail::build_beta(2), detail::build_beta(3)};
    if (a < 0 || a > 3) throw std::invalid_argument("beta: tetrad index must be in {0,1,2,3}");
    return cache[static_cast<std::size_t>(a)];
}

// J^{ab} = beta^a beta^b - beta^b beta^a.
inline Mat10 spin_generator(int a, int b) { return beta(a) * beta(b) - beta(b) * beta(a); }

// Projector onto the six field-strength slots (zero on slots 0..3).
inline const Mat10& projector_p6() {
    static const Mat10 p = [] {
        Mat10 m;
        for (std::size_t k = 4; k < kDim; ++k) m(k, k) = 1.0;
        return m;
    }();
    return p;
}

// Matrix part of the spatial-inversion operator: swaps the helicity +1 and -1
// slots inside each triple, with a sign flip on the magnetic-type block.
inline const Mat10& parity_matrix() {
    static const Mat10 p = detail::from_entries<10>({{{0, 0, 1.0},
                                                      {1, 3, 1.0},
                                                      {2, 2, 1.0},
                                                      {3, 1, 1.0},
                                                      {4, 6, 1.0},
                                                      {5, 5, 1.0},
                                                      {6, 4, 1.0},
                                                      {7, 9, -1.0},
                                                      {8, 8, -1.0},
                                                      {9, 7, -1.0}}});
    return p;
}

// Residual of beta^a beta^b beta^c + beta^c beta^b beta^a
//   - eta^{ab} beta^c - eta^{cb} beta^a for one index triple.
inline double trilinear_residual(int a, int b, int c) {
    const Mat10 lhs = beta(a) * beta(b) * beta(c) + beta(c) * beta(b) * beta(a);
    const Mat10 rhs = minkowski_eta(a, b) * beta(c) + minkowski_eta(c, b) * beta(a);
    return max_abs_diff(lhs, rhs);
}

// Worst trilinear residual over all 64 index triples. This is the
// transcription oracle: any wrong entry in any beta matrix shows up here.
inline double trilinear_residual_max() {
    double worst = 0.0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c) worst = std::max(worst, trilinear_residual(a, b, c));
    return worst;
}

// Diagonal of i*J^{12}: the helicity weight carried by each slot.
inline const std::array<double, kDim>& helicity_weights() {
    static const std::array<double, kDim> w = [] {
        const Mat10 ij12 = cplx{0.0, 1.0} * spin_generator(1, 2);
        std::array<double, kDim> out{};
        for (std::size_t k = 0; k < kDim; ++k) out[k] = ij12(k, k).real();
        return out;
    }();
    return w;
}

}  // namespace dkp
}  // namespace dkmaxwell
