#ifndef KINET_DISTRIBUTION_HPP
#define KINET_DISTRIBUTION_HPP

#include <vector>

#include "kinet/grid.hpp"
#include "kinet/vec3.hpp"

namespace kinet {

/// Gridded phase-space density f(v): one value per cell, interpreted as a
/// number density per unit velocity volume. Collision operators reuse the
/// container for their (signed) output values.
struct DistributionFunction {
    DistributionFunction(VelocityGrid g, std::vector<double> vals)
        : grid(g), values(std::move(vals)) {
        if (values.size() != grid.size())
            throw ParameterError("DistributionFunction: value count does not match the grid");
    }

    explicit DistributionFunction(VelocityGrid g) : grid(g), values(g.size(), 0.0) {}

    VelocityGrid grid;
    std::vector<double> values;

    double operator[](std::size_t i) const { return values[i]; }
    double& operator[](std::size_t i) { return values[i]; }

    /// True when the container is a valid distribution (nonnegative, finite).
    bool is_nonnegative(double tol = 0.0) const;
    double max_abs() const;
};

struct Moments {
    double mass = 0.0;
    Vec3 momentum{};
    double energy = 0.0;  // (1/2) ∫ |v|^2 f dv
};

/// Maxwellian with the given number density, mean velocity and temperature,
/// sampled at cell centers.
DistributionFunction maxwellian(const VelocityGrid& grid, double density, const Vec3& mean,
                                double temperature);

/// Mass, momentum and energy by midpoint quadrature (deterministic pairwise
/// sums, safe to call concurrently).
Moments moments(const DistributionFunction& f);

/// Spatial density of a homogeneous phase-space measure g(x,w) = f(w):
/// the position-independent value ∫ f dw.
double spatial_density(const DistributionFunction& f);

/// Box-averaged spatial density of a discrete ensemble: count / volume,
/// per cell of a bins^3 partition of the periodic box [0, box_side)^3.
std::vector<double> spatial_density(const std::vector<Vec3>& positions, double box_side,
                                    int bins_per_axis);

/// a*f + b*g on a common grid.
DistributionFunction linear_combination(double a, const DistributionFunction& f, double b,
                                        const DistributionFunction& g);

/// Central-difference gradient, one-sided at the outermost cells.
std::vector<Vec3> gradient(const DistributionFunction& f);

/// Gradient of log f with the same stencils; values are clamped away from
/// zero so that cells with f = 0 produce finite (and downstream-irrelevant,
/// since every use multiplies by f) entries.
std::vector<Vec3> log_gradient(const DistributionFunction& f);

}  // namespace kinet

#endif
