#include "kinet/distribution.hpp"

#include <cmath>

#include "kinet/sum.hpp"

namespace kinet {

bool DistributionFunction::is_nonnegative(double tol) const {
    for (double v : values)
        if (!(v >= -tol) || !std::isfinite(v)) return false;
    return true;
}

double DistributionFunction::max_abs() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
}

DistributionFunction maxwellian(const VelocityGrid& grid, double density, const Vec3& mean,
                                double temperature) {
    if (!(temperature > 0.0)) throw ParameterError("maxwellian: temperature must be positive");
    if (density < 0.0) throw ParameterError("maxwellian: density must be nonnegative");
    DistributionFunction f(grid);
    const double norm = density * std::pow(2.0 * M_PI * temperature, -1.5);
    const int n = grid.n_per_axis();
    // Separable profile: evaluate the three axis factors once.
    std::vector<double> gx(static_cast<std::size_t>(n)), gy(gx), gz(gx);
    for (int i = 0; i < n; ++i) {
        const double c = grid.axis_center(i);
        gx[static_cast<std::size_t>(i)] = std::exp(-(c - mean.x) * (c - mean.x) / (2.0 * temperature));
        gy[static_cast<std::size_t>(i)] = std::exp(-(c - mean.y) * (c - mean.y) / (2.0 * temperature));
        gz[static_cast<std::size_t>(i)] = std::exp(-(c - mean.z) * (c - mean.z) / (2.0 * temperature));
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                f[grid.flat_index(i, j, k)] = norm * gx[static_cast<std::size_t>(i)] *
                                              gy[static_cast<std::size_t>(j)] *
                                              gz[static_cast<std::size_t>(k)];
    return f;
}

Moments moments(const DistributionFunction& f) {
    const VelocityGrid& g = f.grid;
    const double w = g.cell_volume();
    const std::size_t n = g.size();
    Moments m;
    m.mass = w * pairwise_sum_indexed(0, n, [&](std::size_t i) { return f[i]; });
    m.momentum.x = w * pairwise_sum_indexed(0, n, [&](std::size_t i) { return g.center(i).x * f[i]; });
    m.momentum.y = w * pairwise_sum_indexed(0, n, [&](std::size_t i) { return g.center(i).y * f[i]; });
    m.momentum.z = w * pairwise_sum_indexed(0, n, [&](std::size_t i) { return g.center(i).z * f[i]; });
    m.energy = 0.5 * w * pairwise_sum_indexed(0, n, [&](std::size_t i) {
        return norm2(g.center(i)) * f[i];
    });
    return m;
}

double spatial_density(const DistributionFunction& f) { return moments(f).mass; }

std::vector<double> spatial_density(const std::vector<Vec3>& positions, double box_side,
                                    int bins_per_axis) {
    if (!(box_side > 0.0) || bins_per_axis < 1)
        throw ParameterError("spatial_density: invalid box or bin count");
    const int b = bins_per_axis;
    std::vector<double> rho(static_cast<std::size_t>(b) * b * b, 0.0);
    const double cell = box_side / b;
    for (const Vec3& p : positions) {
        int idx[3];
        for (int a = 0; a < 3; ++a) {
            double c = std::fmod(p[static_cast<std::size_t>(a)], box_side);
            if (c < 0) c += box_side;
            idx[a] = std::min(b - 1, static_cast<int>(c / cell));
        }
        rho[(static_cast<std::size_t>(idx[0]) * b + idx[1]) * b + idx[2]] += 1.0;
    }
    const double vol = cell * cell * cell;
    for (double& r : rho) r /= vol;
    return rho;
}

DistributionFunction linear_combination(double a, const DistributionFunction& f, double b,
                                        const DistributionFunction& g) {
    if (!(f.grid == g.grid)) throw ParameterError("linear_combination: grids differ");
    DistributionFunction out(f.grid);
    for (std::size_t i = 0; i < out.values.size(); ++i) out[i] = a * f[i] + b * g[i];
    return out;
}

namespace {

template <typename Get>
std::vector<Vec3> gradient_impl(const VelocityGrid& g, Get&& value) {
    const int n = g.n_per_axis();
    const double h = g.spacing();
    std::vector<Vec3> grad(g.size());
    auto diff = [&](int i, int j, int k, int axis) {
        int lo[3] = {i, j, k}, hi[3] = {i, j, k};
        const int c = (axis == 0 ? i : (axis == 1 ? j : k));
        if (c == 0) {
            hi[axis] = c + 1;
            return (value(hi[0], hi[1], hi[2]) - value(lo[0], lo[1], lo[2])) / h;
        }
        if (c == n - 1) {
            lo[axis] = c - 1;
            return (value(hi[0], hi[1], hi[2]) - value(lo[0], lo[1], lo[2])) / h;
        }
        lo[axis] = c - 1;
        hi[axis] = c + 1;
        return (value(hi[0], hi[1], hi[2]) - value(lo[0], lo[1], lo[2])) / (2.0 * h);
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                grad[g.flat_index(i, j, k)] = {diff(i, j, k, 0), diff(i, j, k, 1), diff(i, j, k, 2)};
    return grad;
}

}  // namespace

std::vector<Vec3> gradient(const DistributionFunction& f) {
    const VelocityGrid& g = f.grid;
    return gradient_impl(g, [&](int i, int j, int k) { return f[g.flat_index(i, j, k)]; });
}

std::vector<Vec3> log_gradient(const DistributionFunction& f) {
    const VelocityGrid& g = f.grid;
    // Floor keeps log finite on empty cells; every consumer multiplies the
    // result by f, so floored cells contribute nothing.
    const double floor = 1e-300;
    return gradient_impl(g, [&](int i, int j, int k) {
        return std::log(std::max(f[g.flat_index(i, j, k)], floor));
    });
}

}  // namespace kinet
