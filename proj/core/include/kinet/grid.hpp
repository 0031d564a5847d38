#ifndef KINET_GRID_HPP
#define KINET_GRID_HPP

#include <array>
#include <cstddef>

#include "kinet/errors.hpp"
#include "kinet/vec3.hpp"

namespace kinet {

/// Uniform Cartesian velocity mesh on [-v_max, v_max]^3 with midpoint cell
/// centers. Cell (i,j,k) maps to the flat index ((i*n)+j)*n+k, i.e. rows
/// are lexicographic in (i,j,k) with k fastest.
class VelocityGrid {
public:
    VelocityGrid(int n_per_axis, double v_max) : n_(n_per_axis), v_max_(v_max) {
        if (n_per_axis < 2) throw ParameterError("VelocityGrid: n_per_axis must be >= 2");
        if (!(v_max > 0.0)) throw ParameterError("VelocityGrid: v_max must be positive");
        spacing_ = 2.0 * v_max_ / static_cast<double>(n_);
    }

    int n_per_axis() const { return n_; }
    double v_max() const { return v_max_; }
    double spacing() const { return spacing_; }
    double cell_volume() const { return spacing_ * spacing_ * spacing_; }
    std::size_t size() const {
        const std::size_t n = static_cast<std::size_t>(n_);
        return n * n * n;
    }

    /// Center coordinate of cell index i along one axis.
    double axis_center(int i) const { return -v_max_ + (static_cast<double>(i) + 0.5) * spacing_; }

    std::size_t flat_index(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                static_cast<std::size_t>(j)) *
                   static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(k);
    }

    std::array<int, 3> unflatten(std::size_t idx) const {
        const std::size_t n = static_cast<std::size_t>(n_);
        return {static_cast<int>(idx / (n * n)), static_cast<int>((idx / n) % n),
                static_cast<int>(idx % n)};
    }

    Vec3 center(std::size_t idx) const {
        const auto ijk = unflatten(idx);
        return {axis_center(ijk[0]), axis_center(ijk[1]), axis_center(ijk[2])};
    }

    Vec3 center(int i, int j, int k) const {
        return {axis_center(i), axis_center(j), axis_center(k)};
    }

    bool contains(const Vec3& v) const {
        return v.x > -v_max_ && v.x < v_max_ && v.y > -v_max_ && v.y < v_max_ && v.z > -v_max_ &&
               v.z < v_max_;
    }

    friend bool operator==(const VelocityGrid& a, const VelocityGrid& b) {
        return a.n_ == b.n_ && a.v_max_ == b.v_max_;
    }

private:
    int n_;
    double v_max_;
    double spacing_;
};

/// Trilinear deposition stencil for a point v: up to 8 (index, weight)
/// pairs with weights summing to one. Used by conservative remapping.
struct DepositStencil {
    std::array<std::size_t, 8> index{};
    std::array<double, 8> weight{};
    int count = 0;
    bool in_bounds = false;
};

inline DepositStencil trilinear_stencil(const VelocityGrid& g, const Vec3& v) {
    DepositStencil st;
    // Cell-center based interpolation: locate v between neighboring centers.
    const double h = g.spacing();
    double fidx[3];
    for (int a = 0; a < 3; ++a) fidx[a] = (v[static_cast<std::size_t>(a)] + g.v_max()) / h - 0.5;
    int base[3];
    double frac[3];
    for (int a = 0; a < 3; ++a) {
        const double fl = std::floor(fidx[a]);
        base[a] = static_cast<int>(fl);
        frac[a] = fidx[a] - fl;
        if (base[a] < 0 || base[a] + 1 >= g.n_per_axis()) return st;  // outside: skip
    }
    st.in_bounds = true;
    for (int di = 0; di < 2; ++di)
        for (int dj = 0; dj < 2; ++dj)
            for (int dk = 0; dk < 2; ++dk) {
                const double w = (di ? frac[0] : 1.0 - frac[0]) * (dj ? frac[1] : 1.0 - frac[1]) *
                                 (dk ? frac[2] : 1.0 - frac[2]);
                st.index[static_cast<std::size_t>(st.count)] =
                    g.flat_index(base[0] + di, base[1] + dj, base[2] + dk);
                st.weight[static_cast<std::size_t>(st.count)] = w;
                ++st.count;
            }
    return st;
}

}  // namespace kinet

#endif
