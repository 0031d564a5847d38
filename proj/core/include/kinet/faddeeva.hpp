#ifndef KINET_FADDEEVA_HPP
#define KINET_FADDEEVA_HPP

#include <complex>

namespace kinet {

/// Scaled complex error function w(z) = exp(-z^2) erfc(-iz).
///
/// Upper half plane (and real axis): Weideman's rational expansion,
/// switching to the Laplace continued fraction for large |z|. Lower half
/// plane via w(z) = 2 exp(-z^2) - w(-z); exp(-z^2) overflows for
/// Im(z) << -sqrt(700), far outside of the shallow continuation depths the
/// dispersion solvers need.
///
/// Relative accuracy ~1e-13 over the tested domain.
std::complex<double> faddeeva_w(std::complex<double> z);

/// Plasma dispersion function Z(xi) = i sqrt(pi) w(xi) and its derivative
/// Z'(xi) = -2 (1 + xi Z(xi)).
std::complex<double> plasma_z(std::complex<double> xi);
std::complex<double> plasma_z_derivative(std::complex<double> xi);

}  // namespace kinet

#endif
