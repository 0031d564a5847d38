#ifndef KINET_DISPERSION_HPP
#define KINET_DISPERSION_HPP

#include <complex>
#include <optional>
#include <vector>

#include "kinet/distribution.hpp"
#include "kinet/potential.hpp"

namespace kinet::vlasov {

using Complex = std::complex<double>;

struct MaxwellianComponent {
    double density;
    Vec3 mean;
    double temperature;
};

/// Background + interaction + coupling for collective-response evaluations:
/// the velocity distribution g, the Fourier transform of the potential and
/// the coupling sigma = lim eps L_eps^3.
///
/// Backgrounds built from Maxwellian mixtures carry their analytic form,
/// which the dispersion solvers use for high-precision evaluation and for
/// the analytic continuation the root trackers need. Plain gridded
/// backgrounds use the principal-value quadrature path.
class DispersionContext {
public:
    DispersionContext(DistributionFunction g, potentials::FourierPotential phi, double sigma);

    static DispersionContext maxwellian_background(const VelocityGrid& grid, double density,
                                                   const Vec3& mean, double temperature,
                                                   potentials::FourierPotential phi, double sigma);
    static DispersionContext mixture_background(const VelocityGrid& grid,
                                                std::vector<MaxwellianComponent> components,
                                                potentials::FourierPotential phi, double sigma);

    const DistributionFunction& background() const { return g_; }
    const potentials::FourierPotential& fourier_potential() const { return phi_; }
    double sigma() const { return sigma_; }
    const std::vector<MaxwellianComponent>* analytic_background() const {
        return components_.empty() ? nullptr : &components_;
    }
    double max_background_speed() const;

private:
    DistributionFunction g_;
    potentials::FourierPotential phi_;
    double sigma_;
    std::vector<MaxwellianComponent> components_;
};

/// Psi(zeta; theta) = \int i theta. grad g(w) / (zeta + i theta.w) dw for
/// Re zeta >= 0; the boundary Re zeta = 0 carries the principal value plus
/// half-residue limit from the right half plane. Gridded-background path:
/// 1d marginal reduction along theta, then exact integration of the
/// piecewise-linear marginal derivative against the Cauchy kernel.
Complex psi(Complex zeta, const Vec3& theta, const DistributionFunction& g);

/// Analytic Maxwellian-mixture form of Psi, finite for every zeta; for
/// Re zeta < 0 it is the analytic continuation from the right half plane.
Complex psi_mixture(Complex zeta, const Vec3& theta,
                    const std::vector<MaxwellianComponent>& components);

/// Psi through the context: analytic mixture when available, gridded
/// quadrature otherwise. Enforces Re zeta >= 0.
Complex psi(Complex zeta, const Vec3& theta, const DispersionContext& ctx);

/// Delta_sigma(k, z) = 1 - sigma (2 pi)^{3/2} Phi_hat(|k|) Psi(z/|k|, k/|k|),
/// Re z >= 0.
Complex delta_sigma(const Vec3& k, Complex z, const DispersionContext& ctx);

/// Same function continued across the imaginary axis (analytic backgrounds
/// only); used by the mode trackers.
Complex delta_sigma_continued(const Vec3& k, Complex z, const DispersionContext& ctx);

/// Dielectric function eps(k, u) = 1 - (2 pi)^{3/2} Phi_hat(k)
/// \int k.grad f / (u + k.v - i0) dv: the boundary value z -> i u of the
/// sigma = 1 dispersion function, evaluated on the same code path.
Complex dielectric(const Vec3& k, double u, const DistributionFunction& f,
                   const potentials::FourierPotential& phi);
Complex dielectric(const Vec3& k, double u, const DispersionContext& ctx);

/// Debye-length-scaled dispersion function
/// Delta_L(k, z) = 1 - 2 (2 pi)^{3/2} / L^2 Phi_hat(k/L) Psi(z/|k|, k/|k|).
Complex delta_L(const Vec3& k, Complex z, double L, const DispersionContext& ctx);

/// Plasma frequency and Debye wavenumber of a one-component Maxwellian
/// context with a Coulomb-like tail: omega_p^2 = 4 pi sigma rho C with C
/// read off the k^{-2} tail of Phi_hat, and k_D = omega_p / sqrt(T).
double plasma_frequency(const DispersionContext& ctx);
double debye_wavenumber(const DispersionContext& ctx);

}  // namespace kinet::vlasov

#endif
