#include "kinet/scattering.hpp"

#include <algorithm>
#include <cmath>

#include "kinet/quadrature.hpp"

namespace kinet::potentials {

namespace {

// W(u) = 1 - b^2 u^2 - Phi(1/u)/E with u = 1/r. The outermost turning
// point r0 is the smallest root u0 > 0 of W.
struct RadialProblem {
    const PotentialSpec* spec;
    double b, energy;

    double W(double u) const {
        const double r = 1.0 / u;
        return 1.0 - b * b * u * u - evaluate_potential(*spec, {r, 0, 0}) / energy;
    }
};

double locate_turning_point(const RadialProblem& p) {
    // March outward in u until W changes sign, then bisect to 1e-12.
    double u_lo = 1e-12;
    if (p.W(u_lo) <= 0.0)
        throw NumericalResolutionError("scattering: no free asymptote (W <= 0 at large r)");
    double u_hi = u_lo;
    double step = std::max(1e-3, 0.1 / std::max(p.b, 1e-3));
    bool bracketed = false;
    for (int i = 0; i < 400; ++i) {
        const double u_next = u_hi + step;
        if (p.W(u_next) <= 0.0) {
            u_lo = u_hi;
            u_hi = u_next;
            bracketed = true;
            break;
        }
        u_hi = u_next;
        step *= 1.25;
        if (u_hi > 1e9) break;
    }
    if (!bracketed)
        throw NumericalResolutionError(
            "scattering: no turning point found (over-barrier trajectory)");
    for (int i = 0; i < 200 && u_hi - u_lo > 1e-16 * u_hi; ++i) {
        const double mid = 0.5 * (u_lo + u_hi);
        if (p.W(mid) > 0.0)
            u_lo = mid;
        else
            u_hi = mid;
    }
    return 0.5 * (u_lo + u_hi);
}

}  // namespace

double scattering_cross_section(const PotentialSpec& spec, double relative_speed,
                                double impact_parameter, double reduced_mass) {
    spec.validate();
    if (!(relative_speed > 0.0))
        throw ParameterError("scattering: relative speed must be positive");
    if (impact_parameter < 0.0)
        throw ParameterError("scattering: impact parameter must be nonnegative");

    if (spec.family == PotentialFamily::hard_sphere) {
        const double contact = 2.0 * spec.radius;
        if (impact_parameter >= contact) return 0.0;
        return 2.0 * std::acos(impact_parameter / contact);
    }

    const double energy = 0.5 * reduced_mass * relative_speed * relative_speed;
    const RadialProblem prob{&spec, impact_parameter, energy};
    const double u0 = locate_turning_point(prob);

    // Orbiting guard: the integrand is not integrable when W'(u0) ~ 0.
    const double du = 1e-7 * u0;
    const double wp = (prob.W(u0 - du) - prob.W(u0)) / du;
    if (!(wp > 1e-10))
        throw NumericalResolutionError("scattering: near-critical (orbiting) turning point");

    if (impact_parameter == 0.0) return M_PI;  // head-on, under-barrier

    // Substitution u = u0 (1 - t^2) removes the inverse-square-root
    // endpoint singularity; the remaining integrand is smooth on (0, 1).
    auto integrand = [&prob, u0](double t) {
        const double u = u0 * (1.0 - t * t);
        const double w = prob.W(u);
        if (w <= 0.0) return 0.0;  // roundoff guard inside the turning layer
        return 2.0 * u0 * t / std::sqrt(w);
    };
    const auto q = integrate_adaptive(integrand, 0.0, 1.0, 1e-10);
    if (!q.converged)
        throw NumericalResolutionError("scattering: turning-point integral did not converge");
    const double chi = M_PI - 2.0 * impact_parameter * q.value;
    return chi;
}

DifferentialCrossSection::DifferentialCrossSection(const PotentialSpec& spec,
                                                   double relative_speed, double reduced_mass,
                                                   int table_size, double b_max) {
    if (table_size < 8) throw ParameterError("cross-section table too small");
    if (b_max <= 0.0) {
        // Heuristic horizon: deflections decay with b; stop when chi is tiny.
        b_max = spec.family == PotentialFamily::hard_sphere ? 2.0 * spec.radius
                                                            : 8.0 * spec.range;
    }
    b_max_ = b_max;
    b_.resize(static_cast<std::size_t>(table_size));
    chi_.resize(static_cast<std::size_t>(table_size));
    for (int i = 0; i < table_size; ++i) {
        // b runs from near b_max down to b_max/(2 n); b = 0 stays out.
        const double b = b_max * (static_cast<double>(table_size - i) - 0.5) /
                         static_cast<double>(table_size);
        b_[static_cast<std::size_t>(i)] = b;
        chi_[static_cast<std::size_t>(i)] =
            scattering_cross_section(spec, relative_speed, b, reduced_mass);
    }
    // Enforce the monotone branch (repulsive potentials): chi increasing as b falls.
    for (std::size_t i = 1; i < chi_.size(); ++i)
        chi_[i] = std::max(chi_[i], chi_[i - 1]);
}

double DifferentialCrossSection::operator()(double chi) const {
    if (chi <= chi_.front() || chi > M_PI) return 0.0;
    const auto it = std::lower_bound(chi_.begin(), chi_.end(), chi);
    const std::size_t hi = static_cast<std::size_t>(it - chi_.begin());
    if (hi == 0) return 0.0;
    std::size_t lo = hi - 1;
    if (hi >= chi_.size()) return 0.0;
    const double dchi = chi_[hi] - chi_[lo];
    if (dchi <= 0.0) return 0.0;
    const double t = (chi - chi_[lo]) / dchi;
    const double b = b_[lo] + t * (b_[hi] - b_[lo]);
    const double dbdchi = (b_[hi] - b_[lo]) / dchi;
    const double s = std::sin(chi);
    if (s < 1e-12) return 0.0;
    return b / s * std::abs(dbdchi);
}

}  // namespace kinet::potentials
