#ifndef KINET_POTENTIAL_HPP
#define KINET_POTENTIAL_HPP

#include <functional>
#include <string>

#include "kinet/errors.hpp"
#include "kinet/vec3.hpp"

namespace kinet::potentials {

enum class PotentialFamily {
    smooth_decaying,
    power_law,
    coulomb_like,
    hard_sphere,
    screened_coulomb,
};

enum class SmoothProfile { exponential, gaussian };

/// One member of the interaction family: amplitude * profile(|x| / range).
///
/// Unit-range profiles:
///   smooth_decaying/exponential  exp(-r)
///   smooth_decaying/gaussian     exp(-r^2/2)
///   power_law                    1/r^s, s > 1/2
///   coulomb_like                 1/r
///   screened_coulomb             exp(-r/lambda) / (4 pi r)
///   hard_sphere                  contact at |x| = 2a (no smooth profile)
struct PotentialSpec {
    PotentialFamily family = PotentialFamily::smooth_decaying;
    double amplitude = 1.0;  // epsilon prefactor
    double range = 1.0;      // rescaling length
    SmoothProfile profile = SmoothProfile::exponential;
    double exponent = 0.0;          // power_law s
    double radius = 0.0;            // hard_sphere a
    double screening_length = 1.0;  // screened_coulomb lambda (units of range)

    static PotentialSpec smooth(SmoothProfile p, double amplitude = 1.0, double range = 1.0);
    static PotentialSpec power(double s, double amplitude = 1.0, double range = 1.0);
    static PotentialSpec coulomb(double amplitude = 1.0, double range = 1.0);
    static PotentialSpec hard(double radius);
    static PotentialSpec screened(double lambda, double amplitude = 1.0, double range = 1.0);

    void validate() const;  // throws ParameterError on invariant violations
    bool is_singular_at_origin() const {
        return family == PotentialFamily::power_law || family == PotentialFamily::coulomb_like ||
               family == PotentialFamily::screened_coulomb;
    }
    std::string family_name() const;
};

/// Phi(|x|) for the given member. Hard spheres return 0 outside contact and
/// throw DomainError at |x| <= 2a; singular families throw DomainError at
/// the origin.
double evaluate_potential(const PotentialSpec& spec, const Vec3& x);

/// Radial derivative d Phi_spec / dr at r = |x|; used for forces.
double potential_radial_derivative(const PotentialSpec& spec, double r);

/// -grad Phi_spec(x) for smooth (non hard-sphere) members.
Vec3 potential_force(const PotentialSpec& spec, const Vec3& x);

/// Radial Fourier transform k -> (2 pi)^{-3/2} \int Phi e^{-ik.x} dx with the
/// divergence metadata the transport integrals need.
class FourierPotential {
public:
    enum class Provenance { analytic, quadrature };

    FourierPotential() = default;
    FourierPotential(std::function<double(double)> radial, Provenance prov, bool ir_divergent,
                     bool uv_divergent)
        : radial_(std::move(radial)),
          provenance_(prov),
          ir_divergent_(ir_divergent),
          uv_divergent_(uv_divergent) {}

    double operator()(double k) const { return radial_ ? radial_(k) : 0.0; }
    Provenance provenance() const { return provenance_; }

    /// True when \int_0^inf k^3 Phi_hat(k)^2 dk diverges at k -> 0 / k -> inf.
    bool kappa_ir_divergent() const { return ir_divergent_; }
    bool kappa_uv_divergent() const { return uv_divergent_; }
    bool empty() const { return !radial_; }

private:
    std::function<double(double)> radial_;
    Provenance provenance_ = Provenance::analytic;
    bool ir_divergent_ = false;
    bool uv_divergent_ = false;
};

/// Closed-form transform of the spec (all families carry one; the bare
/// Coulomb case is the pointwise screened limit, never integrated radially).
FourierPotential fourier_transform(const PotentialSpec& spec);

/// Independent quadrature route: adaptive radial sine transform at the
/// requested relative tolerance. Oracle for the analytic forms and fallback
/// for profiles without one. Rejects hard spheres and power laws with
/// s <= 1/2 (divergent integral).
FourierPotential fourier_transform_quadrature(const PotentialSpec& spec, double rel_tol = 1e-10);

}  // namespace kinet::potentials

#endif
