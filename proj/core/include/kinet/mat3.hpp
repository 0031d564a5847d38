#ifndef KINET_MAT3_HPP
#define KINET_MAT3_HPP

#include <array>
#include <cmath>
#include <cstddef>

#include "kinet/vec3.hpp"

namespace kinet {

/// Dense 3x3 matrix, row major. Used for diffusion tensors and frame algebra.
struct Mat3 {
    std::array<double, 9> a{};

    double operator()(std::size_t i, std::size_t j) const { return a[3 * i + j]; }
    double& operator()(std::size_t i, std::size_t j) { return a[3 * i + j]; }

    static constexpr Mat3 zero() { return Mat3{}; }

    static Mat3 identity() {
        Mat3 m;
        m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
        return m;
    }

    Mat3& operator+=(const Mat3& o) {
        for (std::size_t i = 0; i < 9; ++i) a[i] += o.a[i];
        return *this;
    }
    Mat3& operator-=(const Mat3& o) {
        for (std::size_t i = 0; i < 9; ++i) a[i] -= o.a[i];
        return *this;
    }
    Mat3& operator*=(double s) {
        for (std::size_t i = 0; i < 9; ++i) a[i] *= s;
        return *this;
    }

    friend Mat3 operator+(Mat3 x, const Mat3& y) { return x += y; }
    friend Mat3 operator-(Mat3 x, const Mat3& y) { return x -= y; }
    friend Mat3 operator*(double s, Mat3 x) { return x *= s; }
    friend Mat3 operator*(Mat3 x, double s) { return x *= s; }
};

inline Vec3 operator*(const Mat3& m, const Vec3& v) {
    return {m(0, 0) * v.x + m(0, 1) * v.y + m(0, 2) * v.z,
            m(1, 0) * v.x + m(1, 1) * v.y + m(1, 2) * v.z,
            m(2, 0) * v.x + m(2, 1) * v.y + m(2, 2) * v.z};
}

inline Mat3 operator*(const Mat3& x, const Mat3& y) {
    Mat3 r;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < 3; ++k) s += x(i, k) * y(k, j);
            r(i, j) = s;
        }
    return r;
}

inline Mat3 outer(const Vec3& u, const Vec3& v) {
    Mat3 r;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) r(i, j) = u[i] * v[j];
    return r;
}

inline Mat3 transpose(const Mat3& m) {
    Mat3 r;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) r(i, j) = m(j, i);
    return r;
}

inline double trace(const Mat3& m) { return m(0, 0) + m(1, 1) + m(2, 2); }

inline double frobenius_norm(const Mat3& m) {
    double s = 0.0;
    for (double v : m.a) s += v * v;
    return std::sqrt(s);
}

inline double max_asymmetry(const Mat3& m) {
    double s = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) s = std::max(s, std::abs(m(i, j) - m(j, i)));
    return s;
}

/// Projection onto the plane orthogonal to v: I - v̂ ⊗ v̂ (|v| > 0).
inline Mat3 orthogonal_projector(const Vec3& v) {
    const Vec3 n = normalized(v);
    Mat3 p = Mat3::identity();
    p -= outer(n, n);
    return p;
}

struct SymmetricEigen {
    std::array<double, 3> values{};   // ascending
    std::array<Vec3, 3> vectors{};    // orthonormal, matching order
};

/// Cyclic Jacobi eigen-decomposition for a symmetric 3x3 matrix.
/// Converges to machine precision in a handful of sweeps.
inline SymmetricEigen symmetric_eigen(const Mat3& m_in) {
    Mat3 m = m_in;
    Mat3 q = Mat3::identity();
    for (int sweep = 0; sweep < 32; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j) off += m(i, j) * m(i, j);
        if (off < 1e-30 * (1.0 + trace(m) * trace(m))) break;
        for (std::size_t p = 0; p < 3; ++p) {
            for (std::size_t r = p + 1; r < 3; ++r) {
                if (m(p, r) == 0.0) continue;
                const double theta = (m(r, r) - m(p, p)) / (2.0 * m(p, r));
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                Mat3 g = Mat3::identity();
                g(p, p) = c;
                g(r, r) = c;
                g(p, r) = s;
                g(r, p) = -s;
                m = transpose(g) * m * g;
                q = q * g;
            }
        }
    }
    SymmetricEigen e;
    std::array<std::size_t, 3> order = {0, 1, 2};
    std::array<double, 3> d = {m(0, 0), m(1, 1), m(2, 2)};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            if (d[order[j]] < d[order[i]]) std::swap(order[i], order[j]);
    for (std::size_t i = 0; i < 3; ++i) {
        e.values[i] = d[order[i]];
        e.vectors[i] = {q(0, order[i]), q(1, order[i]), q(2, order[i])};
    }
    return e;
}

/// Symmetric positive semidefinite square root; eigenvalues below
/// `clamp_below` (relative to the trace) are treated as zero.
inline Mat3 psd_sqrt(const Mat3& m, double clamp_below = 1e-14) {
    const SymmetricEigen e = symmetric_eigen(m);
    const double floor = clamp_below * std::max(0.0, trace(m));
    Mat3 r = Mat3::zero();
    for (std::size_t i = 0; i < 3; ++i) {
        const double lam = e.values[i] > floor ? e.values[i] : 0.0;
        r += std::sqrt(lam) * outer(e.vectors[i], e.vectors[i]);
    }
    return r;
}

}  // namespace kinet

#endif
