#ifndef KINET_REGIME_HPP
#define KINET_REGIME_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>

namespace kinet::potentials {

enum class KineticEquation { boltzmann, landau, landau_with_log, balescu_lenard, none };

std::string equation_name(KineticEquation e);

/// Weak smooth potentials eps^alpha Phi(x/eps) with N = eps^{-beta}
/// particles per macroscopic unit volume.
struct SoftScaling {
    double alpha;
    double beta;
};

/// Scale-invariant potentials eps/|x|^s with N = eps^{-gamma}. When gamma
/// is omitted the kinetic-consistency value is assumed.
struct ScaleInvariantScaling {
    double s;
    std::optional<double> gamma;
};

enum class DecayClass { fast_decay, coulomb_tail };

/// Range family eps Phi(|x|/L_eps) with L_eps = eps^{-alpha}, alpha in
/// [0, 1/3], in units where the interparticle distance is one.
struct RangeFamilyScaling {
    double alpha;
    DecayClass decay;
};

using ScalingSpec = std::variant<SoftScaling, ScaleInvariantScaling, RangeFamilyScaling>;

struct RegimeReport {
    KineticEquation equation = KineticEquation::none;
    /// Symbolic kinetic timescale in eps. Range-family members report the
    /// microscopic T_eps ("eps^(-2)", "eps^(4a-2)*|log(eps)|", ...); the
    /// macroscopically-formulated scalings report "1" (order-one
    /// macroscopic time) or its |log(eps)| correction.
    std::string timescale;
    std::map<std::string, double> parameters;
    /// lim eps L_eps^3 where the family defines it.
    std::optional<double> sigma;

    std::string to_json() const;
};

/// Decides the limiting kinetic equation and timescale for the given
/// scaling family. Out-of-range parameters raise ParameterError; parameter
/// points that violate the kinetic-consistency relation return
/// equation = none.
RegimeReport classify_regime(const ScalingSpec& scaling);

}  // namespace kinet::potentials

#endif
