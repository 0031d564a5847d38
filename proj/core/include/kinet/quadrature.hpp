#ifndef KINET_QUADRATURE_HPP
#define KINET_QUADRATURE_HPP

#include <functional>

namespace kinet {

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
    bool converged = false;
};

/// Adaptive Gauss-Kronrod 15(7) on [a, b].
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double rel_tol = 1e-10, double abs_tol = 0.0,
                                    int max_intervals = 2000);

/// Adaptive quadrature on [a, ∞) via the rational substitution
/// x = a + t/(1-t).
QuadratureResult integrate_to_infinity(const std::function<double(double)>& f, double a,
                                       double rel_tol = 1e-10, double abs_tol = 0.0);

/// Tanh-sinh (double exponential) rule on (a, b); handles integrable
/// endpoint singularities such as inverse square roots.
QuadratureResult integrate_tanh_sinh(const std::function<double(double)>& f, double a, double b,
                                     double rel_tol = 1e-12, int max_level = 12);

/// ∫_a^∞ g(r) sin(kr) dr for decaying g: half-period partial sums
/// accelerated with Wynn's epsilon algorithm.
QuadratureResult integrate_sin_tail(const std::function<double(double)>& g, double k, double a,
                                    double rel_tol = 1e-10, int max_half_periods = 64);

}  // namespace kinet

#endif
