#include "kinet/potential.hpp"

#include <cmath>

#include "kinet/quadrature.hpp"

namespace kinet::potentials {

namespace {
constexpr double kTwoPiPow32 = 15.749609945722419;  // (2 pi)^{3/2}
}

PotentialSpec PotentialSpec::smooth(SmoothProfile p, double amplitude, double range) {
    PotentialSpec s;
    s.family = PotentialFamily::smooth_decaying;
    s.profile = p;
    s.amplitude = amplitude;
    s.range = range;
    s.validate();
    return s;
}

PotentialSpec PotentialSpec::power(double exponent, double amplitude, double range) {
    PotentialSpec s;
    s.family = PotentialFamily::power_law;
    s.exponent = exponent;
    s.amplitude = amplitude;
    s.range = range;
    s.validate();
    return s;
}

PotentialSpec PotentialSpec::coulomb(double amplitude, double range) {
    PotentialSpec s;
    s.family = PotentialFamily::coulomb_like;
    s.amplitude = amplitude;
    s.range = range;
    s.validate();
    return s;
}

PotentialSpec PotentialSpec::hard(double radius) {
    PotentialSpec s;
    s.family = PotentialFamily::hard_sphere;
    s.radius = radius;
    s.amplitude = 1.0;
    s.range = 1.0;
    s.validate();
    return s;
}

PotentialSpec PotentialSpec::screened(double lambda, double amplitude, double range) {
    PotentialSpec s;
    s.family = PotentialFamily::screened_coulomb;
    s.screening_length = lambda;
    s.amplitude = amplitude;
    s.range = range;
    s.validate();
    return s;
}

void PotentialSpec::validate() const {
    if (amplitude < 0.0) throw ParameterError("potential: amplitude must be nonnegative");
    if (!(range > 0.0)) throw ParameterError("potential: range must be positive");
    if (family == PotentialFamily::power_law && !(exponent > 0.5))
        throw ParameterError("potential: power-law exponent must satisfy s > 1/2");
    if (family == PotentialFamily::hard_sphere && !(radius > 0.0))
        throw ParameterError("potential: hard-sphere radius must be positive");
    if (family == PotentialFamily::screened_coulomb && !(screening_length > 0.0))
        throw ParameterError("potential: screening length must be positive");
}

std::string PotentialSpec::family_name() const {
    switch (family) {
        case PotentialFamily::smooth_decaying:
            return profile == SmoothProfile::exponential ? "smooth-decaying(exponential)"
                                                         : "smooth-decaying(gaussian)";
        case PotentialFamily::power_law:
            return "power-law";
        case PotentialFamily::coulomb_like:
            return "coulomb-like";
        case PotentialFamily::hard_sphere:
            return "hard-sphere";
        case PotentialFamily::screened_coulomb:
            return "screened-coulomb";
    }
    return "?";
}

namespace {

double unit_profile(const PotentialSpec& s, double r) {
    switch (s.family) {
        case PotentialFamily::smooth_decaying:
            return s.profile == SmoothProfile::exponential ? std::exp(-r)
                                                           : std::exp(-0.5 * r * r);
        case PotentialFamily::power_law:
            return std::pow(r, -s.exponent);
        case PotentialFamily::coulomb_like:
            return 1.0 / r;
        case PotentialFamily::screened_coulomb:
            return std::exp(-r / s.screening_length) / (4.0 * M_PI * r);
        case PotentialFamily::hard_sphere:
            return 0.0;
    }
    return 0.0;
}

double unit_profile_derivative(const PotentialSpec& s, double r) {
    switch (s.family) {
        case PotentialFamily::smooth_decaying:
            return s.profile == SmoothProfile::exponential ? -std::exp(-r)
                                                           : -r * std::exp(-0.5 * r * r);
        case PotentialFamily::power_law:
            return -s.exponent * std::pow(r, -s.exponent - 1.0);
        case PotentialFamily::coulomb_like:
            return -1.0 / (r * r);
        case PotentialFamily::screened_coulomb: {
            const double lam = s.screening_length;
            return -std::exp(-r / lam) / (4.0 * M_PI * r) * (1.0 / r + 1.0 / lam);
        }
        case PotentialFamily::hard_sphere:
            return 0.0;
    }
    return 0.0;
}

}  // namespace

double evaluate_potential(const PotentialSpec& spec, const Vec3& x) {
    spec.validate();
    const double r = norm(x);
    if (spec.family == PotentialFamily::hard_sphere) {
        if (r <= 2.0 * spec.radius) throw DomainError("hard-sphere contact at |x| <= 2a");
        return 0.0;
    }
    if (spec.is_singular_at_origin() && r == 0.0)
        throw DomainError("potential evaluated at the singular origin");
    if (spec.amplitude == 0.0) return 0.0;
    return spec.amplitude * unit_profile(spec, r / spec.range);
}

double potential_radial_derivative(const PotentialSpec& spec, double r) {
    if (spec.family == PotentialFamily::hard_sphere) return 0.0;
    if (spec.amplitude == 0.0) return 0.0;
    return spec.amplitude / spec.range * unit_profile_derivative(spec, r / spec.range);
}

Vec3 potential_force(const PotentialSpec& spec, const Vec3& x) {
    const double r = norm(x);
    if (r == 0.0) {
        if (spec.is_singular_at_origin())
            throw DomainError("force evaluated at the singular origin");
        return {0, 0, 0};  // smooth profiles are flat at the center
    }
    const double dphi = potential_radial_derivative(spec, r);
    return (-dphi / r) * x;
}

FourierPotential fourier_transform(const PotentialSpec& spec) {
    spec.validate();
    if (spec.family == PotentialFamily::hard_sphere)
        throw DomainError("hard-sphere potential has no integrable Fourier transform");
    const double A = spec.amplitude;
    const double L = spec.range;
    std::function<double(double)> unit;
    bool ir = false, uv = false;
    switch (spec.family) {
        case PotentialFamily::smooth_decaying:
            if (spec.profile == SmoothProfile::exponential) {
                unit = [](double q) {
                    const double d = 1.0 + q * q;
                    return 8.0 * M_PI / (kTwoPiPow32 * d * d);
                };
            } else {
                unit = [](double q) { return std::exp(-0.5 * q * q); };
            }
            break;
        case PotentialFamily::screened_coulomb: {
            const double m2 = 1.0 / (spec.screening_length * spec.screening_length);
            unit = [m2](double q) { return 1.0 / (kTwoPiPow32 * (q * q + m2)); };
            uv = true;  // k^3 Phi_hat^2 ~ 1/k at large k
            break;
        }
        case PotentialFamily::coulomb_like:
            // Pointwise limit of the screened family; valid for k > 0 only.
            unit = [](double q) { return 4.0 * M_PI / (kTwoPiPow32 * q * q); };
            ir = uv = true;
            break;
        case PotentialFamily::power_law: {
            const double s = spec.exponent;
            if (s >= 3.0)
                throw DomainError(
                    "power-law exponent s >= 3: profile is not locally integrable at the origin");
            const double coeff =
                std::pow(2.0, 1.5 - s) * std::tgamma(0.5 * (3.0 - s)) / std::tgamma(0.5 * s);
            unit = [coeff, s](double q) { return coeff * std::pow(q, s - 3.0); };
            ir = s <= 1.0;
            uv = s >= 1.0;
            break;
        }
        case PotentialFamily::hard_sphere:
            break;
    }
    const double scale = A * L * L * L;
    return FourierPotential([unit, scale, L](double k) { return scale * unit(k * L); },
                            FourierPotential::Provenance::analytic, ir, uv);
}

FourierPotential fourier_transform_quadrature(const PotentialSpec& spec, double rel_tol) {
    spec.validate();
    if (spec.family == PotentialFamily::hard_sphere)
        throw DomainError("hard-sphere potential has no integrable Fourier transform");
    if (spec.family == PotentialFamily::power_law && spec.exponent <= 1.0)
        throw DivergenceError(
            "power-law radial sine transform with s <= 1 is not absolutely convergent");
    const FourierPotential meta = fourier_transform(spec);  // shares divergence metadata
    PotentialSpec local = spec;
    auto radial = [local, rel_tol](double k) {
        // (2 pi)^{-3/2} (4 pi / k) \int_0^inf Phi(r) r sin(kr) dr
        auto g = [&local](double r) {
            return local.amplitude * unit_profile(local, r / local.range) * r;
        };
        const auto q = integrate_sin_tail(g, k, 0.0, rel_tol, 256);
        if (!q.converged)
            throw DivergenceError("radial sine transform did not converge at k=" +
                                  std::to_string(k));
        return 4.0 * M_PI / (kTwoPiPow32 * k) * q.value;
    };
    return FourierPotential(radial, FourierPotential::Provenance::quadrature,
                            meta.kappa_ir_divergent(), meta.kappa_uv_divergent());
}

}  // namespace kinet::potentials
