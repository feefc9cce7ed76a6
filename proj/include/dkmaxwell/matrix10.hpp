// Small dense complex matrix/vector types sized for the 10-component
// Duffin-Kemmer wavefunction. Value semantics, no allocation.
#pragma once

#include <array>
#include <complex>
#include <cstddef>

namespace dkmaxwell {

using cplx = std::complex<double>;

inline constexpr std::size_t kDim = 10;

using Vec10 = std::array<cplx, kDim>;

class Mat10 {
public:
    Mat10() : e_{} {}

    cplx& operator()(std::size_t r, std::size_t c) { return e_[r * kDim + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return e_[r * kDim + c]; }

    Mat10 operator+(const Mat10& o) const {
        Mat10 out;
        for (std::size_t i = 0; i < kDim * kDim; ++i) out.e_[i] = e_[i] + o.e_[i];
        return out;
    }

    Mat10 operator-(const Mat10& o) const {
        Mat10 out;
        for (std::size_t i = 0; i < kDim * kDim; ++i) out.e_[i] = e_[i] - o.e_[i];
        return out;
    }

    Mat10 operator*(const Mat10& o) const {
        Mat10 out;
        for (std::size_t r = 0; r < kDim; ++r)
            for (std::size_t k = 0; k < kDim; ++k) {
                const cplx a = (*this)(r, k);
                if (a == cplx{}) continue;
                for (std::size_t c = 0; c < kDim; ++c) out(r, c) += a * o(k, c);
            }
        return out;
    }

    Mat10 operator*(const cplx& s) const {
        Mat10 out;
        for (std::size_t i = 0; i < kDim * kDim; ++i) out.e_[i] = e_[i] * s;
        return out;
    }

    friend Mat10 operator*(const cplx& s, const Mat10& m) { return m * s; }

    Vec10 operator*(const Vec10& v) const {
        Vec10 out{};
        for (std::size_t r = 0; r < kDim; ++r) {
            cplx acc{};
            for (std::size_t c = 0; c < kDim; ++c) acc += (*this)(r, c) * v[c];
            out[r] = acc;
        }
        return out;
    }

    Mat10 adjoint() const {
        Mat10 out;
        for (std::size_t r = 0; r < kDim; ++r)
            for (std::size_t c = 0; c < kDim; ++c) out(c, r) = std::conj((*this)(r, c));
        return out;
    }

    static Mat10 identity() {
        Mat10 out;
        for (std::size_t i = 0; i < kDim; ++i) out(i, i) = 1.0;
        return out;
    }

    double max_abs() const {
        double worst = 0.0;
        for (std::size_t i = 0; i < kDim * kDim; ++i) worst = std::max(worst, std::abs(e_[i]));
        return worst;
    }

private:
    std::array<cplx, kDim * kDim> e_;
};

inline double max_abs_diff(const Mat10& a, const Mat10& b) { return (a - b).max_abs(); }

inline double max_abs(const Vec10& v) {
    double worst = 0.0;
    for (const cplx& x : v) worst = std::max(worst, std::abs(x));
    return worst;
}

}  // namespace dkmaxwell
