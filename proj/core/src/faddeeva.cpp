#include "kinet/faddeeva.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace kinet {

namespace {

constexpr int kWeidemanN = 64;
constexpr double kSqrtPi = 1.772453850905516027298167;

// Weideman (SIAM Rev. 36, 1994): polynomial coefficients of the rational
// expansion, computed once by a direct DFT of the sampled auxiliary
// function.
struct WeidemanTable {
    double L;
    std::array<double, kWeidemanN> a;  // descending powers
};

WeidemanTable build_weideman() {
    const int N = kWeidemanN;
    const int M = 2 * N;
    const int M2 = 2 * M;
    WeidemanTable t{};
    t.L = std::sqrt(static_cast<double>(N) / std::sqrt(2.0));
    std::vector<double> f(static_cast<std::size_t>(M2), 0.0);
    // f[0] corresponds to theta = -pi (t = -infinity) and stays zero.
    for (int k = -M + 1; k <= M - 1; ++k) {
        const double theta = static_cast<double>(k) * M_PI / M;
        const double tk = t.L * std::tan(0.5 * theta);
        const double val = std::exp(-tk * tk) * (t.L * t.L + tk * tk);
        f[static_cast<std::size_t>(k + M)] = val;
    }
    // fftshift then real(FFT)/M2, evaluated as a direct DFT (init-time only).
    std::vector<double> shifted(static_cast<std::size_t>(M2));
    for (int j = 0; j < M2; ++j) shifted[static_cast<std::size_t>(j)] = f[static_cast<std::size_t>((j + M) % M2)];
    std::vector<double> coeff(static_cast<std::size_t>(N + 1));
    for (int m = 1; m <= N; ++m) {
        double re = 0.0;
        for (int j = 0; j < M2; ++j)
            re += shifted[static_cast<std::size_t>(j)] * std::cos(2.0 * M_PI * j * m / M2);
        coeff[static_cast<std::size_t>(m)] = re / M2;
    }
    for (int i = 0; i < N; ++i) t.a[static_cast<std::size_t>(i)] = coeff[static_cast<std::size_t>(N - i)];
    return t;
}

const WeidemanTable& weideman() {
    static const WeidemanTable table = build_weideman();
    return table;
}

std::complex<double> weideman_w(std::complex<double> z) {
    const WeidemanTable& t = weideman();
    const std::complex<double> iz(-z.imag(), z.real());
    const std::complex<double> den = t.L - iz;
    const std::complex<double> Z = (t.L + iz) / den;
    std::complex<double> p = 0.0;
    for (double c : t.a) p = p * Z + c;
    return 2.0 * p / (den * den) + (1.0 / kSqrtPi) / den;
}

std::complex<double> continued_fraction_w(std::complex<double> z, int depth) {
    std::complex<double> t = z;
    for (int k = depth; k >= 1; --k) t = z - 0.5 * static_cast<double>(k) / t;
    return std::complex<double>(0.0, 1.0 / kSqrtPi) / t;
}

std::complex<double> upper_half_w(std::complex<double> z) {
    const double r2 = std::norm(z);
    if (r2 >= 62.0 * 62.0) return continued_fraction_w(z, 8);
    if (r2 >= 12.0 * 12.0) return continued_fraction_w(z, 24);
    return weideman_w(z);
}

}  // namespace

std::complex<double> faddeeva_w(std::complex<double> z) {
    if (z.imag() >= 0.0) return upper_half_w(z);
    // Reflection into the upper half plane.
    const std::complex<double> e = std::exp(-z * z);
    return 2.0 * e - upper_half_w(-z);
}

std::complex<double> plasma_z(std::complex<double> xi) {
    const std::complex<double> w = faddeeva_w(xi);
    return std::complex<double>(-kSqrtPi * w.imag(), kSqrtPi * w.real());
}

std::complex<double> plasma_z_derivative(std::complex<double> xi) {
    return -2.0 * (1.0 + xi * plasma_z(xi));
}

}  // namespace kinet
