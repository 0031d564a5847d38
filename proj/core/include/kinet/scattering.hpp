#ifndef KINET_SCATTERING_HPP
#define KINET_SCATTERING_HPP

#include <vector>

#include "kinet/potential.hpp"

namespace kinet::potentials {

/// Classical deflection angle chi(b, u) of the two-body scattering problem
/// in the relative coordinate, from the radial turning-point integral.
/// `reduced_mass` defaults to 1/2 (equal unit masses); pass 1 for a tagged
/// particle deflected by a fixed or force-free scatterer.
///
/// Hard spheres: chi = 2 arccos(b / 2a) for b < 2a, 0 otherwise.
double scattering_cross_section(const PotentialSpec& spec, double relative_speed,
                                double impact_parameter, double reduced_mass = 0.5);

/// Differential cross section sigma(chi) for a repulsive monotone member,
/// built from a tabulated, inverted deflection curve b(chi) at fixed speed.
class DifferentialCrossSection {
public:
    DifferentialCrossSection(const PotentialSpec& spec, double relative_speed,
                             double reduced_mass = 0.5, int table_size = 256,
                             double b_max = 0.0);

    /// sigma(chi) = b / sin(chi) |db/dchi|; zero beyond the sampled range.
    double operator()(double chi) const;

    double b_max() const { return b_max_; }

private:
    std::vector<double> chi_;  // descending in b, i.e. ascending here
    std::vector<double> b_;
    double b_max_;
};

}  // namespace kinet::potentials

#endif
