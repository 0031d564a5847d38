#include "kinet/regime.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"

#include "kinet/errors.hpp"

namespace kinet::potentials {

namespace {

constexpr double kRelTol = 1e-12;

bool close(double a, double b) { return std::abs(a - b) <= kRelTol * (1.0 + std::abs(b)); }

std::string format_exponent(double p) {
    // Prefer exact thirds, the only non-decimal exponents in the family.
    for (int num = -6; num <= 6; ++num) {
        if (close(p, static_cast<double>(num) / 3.0) && num % 3 != 0) {
            char buf[16];
            std::snprintf(buf, sizeof buf, "%d/3", num);
            return buf;
        }
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", p);
    return buf;
}

std::string power_of_eps(double p) {
    if (close(p, 0.0)) return "1";
    return "eps^(" + format_exponent(p) + ")";
}

RegimeReport classify_soft(const SoftScaling& s) {
    if (s.alpha < 0.0 || s.alpha > 1.0)
        throw ParameterError("regime: soft scaling requires alpha in [0, 1]");
    if (!(s.beta > 0.0)) throw ParameterError("regime: soft scaling requires beta > 0");
    RegimeReport r;
    r.parameters["alpha"] = s.alpha;
    r.parameters["beta"] = s.beta;
    if (!close(s.beta, 2.0 * (1.0 + s.alpha))) {
        r.equation = KineticEquation::none;
        r.timescale = "";
        return r;
    }
    if (close(s.alpha, 0.0))
        r.equation = KineticEquation::boltzmann;
    else if (close(s.alpha, 1.0))
        r.equation = KineticEquation::balescu_lenard;
    else
        r.equation = KineticEquation::landau;
    r.timescale = "1";  // order-one macroscopic time in this formulation
    return r;
}

RegimeReport classify_scale_invariant(const ScaleInvariantScaling& s) {
    if (!(s.s > 0.5))
        throw ParameterError("regime: scale-invariant potentials require s > 1/2");
    RegimeReport r;
    r.parameters["s"] = s.s;
    double gamma_star;
    if (s.s < 1.0)
        gamma_star = 4.0 / (1.0 + s.s);
    else if (close(s.s, 1.0))
        gamma_star = 2.0;  // both branch formulas meet at s = 1
    else
        gamma_star = 2.0 / s.s;
    const double gamma = s.gamma.value_or(gamma_star);
    r.parameters["gamma"] = gamma;
    if (!close(gamma, gamma_star)) {
        r.equation = KineticEquation::none;
        return r;
    }
    if (close(s.s, 1.0)) {
        r.equation = KineticEquation::landau_with_log;
        r.timescale = "1/|log(eps)|";  // kinetic time tbar = |log eps| t
    } else if (s.s < 1.0) {
        r.equation = KineticEquation::balescu_lenard;
        r.timescale = "1";
    } else {
        r.equation = KineticEquation::boltzmann;
        r.timescale = "1";
    }
    return r;
}

RegimeReport classify_range_family(const RangeFamilyScaling& s) {
    if (s.alpha < 0.0)
        throw ParameterError("regime: range family requires L_eps = eps^(-alpha), alpha >= 0");
    RegimeReport r;
    r.parameters["alpha"] = s.alpha;
    r.parameters["coulomb_tail"] = s.decay == DecayClass::coulomb_tail ? 1.0 : 0.0;
    if (s.alpha > 1.0 / 3.0 + kRelTol) {
        // eps L_eps^3 diverges: the collective term overwhelms free transport.
        r.equation = KineticEquation::none;
        r.sigma = std::nullopt;
        return r;
    }
    const bool at_bl = close(s.alpha, 1.0 / 3.0);
    r.sigma = at_bl ? 1.0 : 0.0;
    const double exponent = 4.0 * s.alpha - 2.0;  // -2 at alpha=0, -2/3 at alpha=1/3
    const std::string teps = power_of_eps(exponent);
    if (s.decay == DecayClass::coulomb_tail) {
        r.equation = KineticEquation::landau_with_log;
        r.timescale = teps + "*|log(eps)|";
    } else if (at_bl) {
        r.equation = KineticEquation::balescu_lenard;
        r.timescale = teps;
    } else {
        r.equation = KineticEquation::landau;
        r.timescale = teps;
    }
    return r;
}

}  // namespace

std::string equation_name(KineticEquation e) {
    switch (e) {
        case KineticEquation::boltzmann:
            return "Boltzmann";
        case KineticEquation::landau:
            return "Landau";
        case KineticEquation::landau_with_log:
            return "Landau-with-log";
        case KineticEquation::balescu_lenard:
            return "Balescu-Lenard";
        case KineticEquation::none:
            return "none";
    }
    return "?";
}

std::string RegimeReport::to_json() const {
    nlohmann::json j;
    j["equation"] = equation_name(equation);
    j["timescale"] = timescale;
    nlohmann::json p;
    for (const auto& [k, v] : parameters) p[k] = v;
    if (sigma) p["sigma"] = *sigma;
    j["parameters"] = p;
    return j.dump();
}

RegimeReport classify_regime(const ScalingSpec& scaling) {
    return std::visit(
        [](const auto& s) -> RegimeReport {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, SoftScaling>) return classify_soft(s);
            if constexpr (std::is_same_v<T, ScaleInvariantScaling>)
                return classify_scale_invariant(s);
            if constexpr (std::is_same_v<T, RangeFamilyScaling>) return classify_range_family(s);
        },
        scaling);
}

}  // namespace kinet::potentials
