#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>
#include <sstream>

#include "kinet/csv.hpp"
#include "kinet/distribution.hpp"
#include "kinet/faddeeva.hpp"
#include "kinet/grid.hpp"
#include "kinet/mat3.hpp"
#include "kinet/quadrature.hpp"
#include "kinet/rng.hpp"
#include "kinet/sum.hpp"

using namespace kinet;

TEST_CASE("grid invariants and indexing") {
    CHECK_THROWS_AS(VelocityGrid(1, 6.0), ParameterError);
    CHECK_THROWS_AS(VelocityGrid(8, 0.0), ParameterError);
    VelocityGrid g(8, 4.0);
    CHECK(g.spacing() == doctest::Approx(1.0));
    CHECK(g.size() == 512);
    // Lexicographic order with k fastest.
    CHECK(g.flat_index(0, 0, 1) == 1);
    CHECK(g.flat_index(0, 1, 0) == 8);
    CHECK(g.flat_index(1, 0, 0) == 64);
    const auto ijk = g.unflatten(g.flat_index(3, 5, 7));
    CHECK(ijk[0] == 3);
    CHECK(ijk[1] == 5);
    CHECK(ijk[2] == 7);
    CHECK(g.axis_center(0) == doctest::Approx(-3.5));
}

TEST_CASE("maxwellian moments match analytic values") {
    VelocityGrid g(32, 6.0);

    SUBCASE("zero density gives the zero distribution") {
        auto f = maxwellian(g, 0.0, {0, 0, 0}, 1.0);
        for (double v : f.values) CHECK(v == 0.0);
        auto m = moments(f);
        CHECK(m.mass == 0.0);
        CHECK(m.energy == 0.0);
    }

    SUBCASE("unit maxwellian mass within 1e-6") {
        auto f = maxwellian(g, 1.0, {0, 0, 0}, 1.0);
        auto m = moments(f);
        CHECK(std::abs(m.mass - 1.0) < 1e-6);
        // Energy of a unit-temperature Maxwellian: 3/2.
        CHECK(std::abs(m.energy - 1.5) < 1e-4);
        // Symmetry: momentum components vanish.
        CHECK(std::abs(m.momentum.x) < 1e-12 * m.mass);
        CHECK(std::abs(m.momentum.y) < 1e-12 * m.mass);
        CHECK(std::abs(m.momentum.z) < 1e-12 * m.mass);
    }

    SUBCASE("shifted maxwellian momentum") {
        // 6-sigma coverage around the shifted mean.
        VelocityGrid gs(32, 7.0);
        auto f = maxwellian(gs, 1.0, {1, 0, 0}, 1.0);
        auto m = moments(f);
        CHECK(std::abs(m.momentum.x - m.mass) < 1e-6 * m.mass);
        CHECK(std::abs(m.momentum.y) < 1e-6 * m.mass);
        // Cauchy-Schwarz bound on the moment triple.
        CHECK(m.energy >= norm2(m.momentum) / (2.0 * m.mass));
    }

    SUBCASE("non-positive temperature is a parameter error") {
        CHECK_THROWS_AS(maxwellian(g, 1.0, {0, 0, 0}, 0.0), ParameterError);
        CHECK_THROWS_AS(maxwellian(g, -1.0, {0, 0, 0}, 1.0), ParameterError);
    }
}

TEST_CASE("quadrature linearity of moments") {
    VelocityGrid g(16, 5.0);
    auto f = maxwellian(g, 1.0, {0.5, 0, 0}, 0.8);
    auto h = maxwellian(g, 2.0, {-1, 0.3, 0}, 1.3);
    const double a = 0.7, b = -0.2;
    auto combo = linear_combination(a, f, b, h);
    auto mf = moments(f), mh = moments(h), mc = moments(combo);
    const double scale = std::abs(a * mf.mass) + std::abs(b * mh.mass);
    CHECK(std::abs(mc.mass - (a * mf.mass + b * mh.mass)) < 1e-13 * scale);
    CHECK(std::abs(mc.energy - (a * mf.energy + b * mh.energy)) <
          1e-13 * (std::abs(mf.energy) + std::abs(mh.energy)));
    for (std::size_t ax = 0; ax < 3; ++ax) {
        const double want = a * mf.momentum[ax] + b * mh.momentum[ax];
        CHECK(std::abs(mc.momentum[ax] - want) < 1e-13 * (1.0 + std::abs(want)));
    }
}

TEST_CASE("grid refinement reduces maxwellian mass error monotonically") {
    // Three doublings before the midpoint rule hits the 6-sigma truncation
    // floor (~6e-9), below which refinement cannot help.
    double prev = 1e9;
    for (int n : {2, 4, 8, 16}) {
        VelocityGrid g(n, 6.0);  // v_max = 6 sqrt(T)
        auto m = moments(maxwellian(g, 1.0, {0, 0, 0}, 1.0));
        const double err = std::abs(m.mass - 1.0);
        CHECK(err < prev);
        prev = err;
    }
}

TEST_CASE("spatial density") {
    VelocityGrid g(16, 5.0);
    SUBCASE("homogeneous measure: constant density equal to the mass") {
        auto f = maxwellian(g, 2.5, {0, 0, 0}, 1.0);
        CHECK(spatial_density(f) == doctest::Approx(moments(f).mass));
        CHECK(spatial_density(DistributionFunction(g)) == 0.0);
    }
    SUBCASE("discrete ensemble: box-averaged count") {
        std::mt19937_64 gen(7);
        std::uniform_real_distribution<double> u(0.0, 10.0);
        std::vector<Vec3> pos;
        for (int i = 0; i < 4000; ++i) pos.push_back({u(gen), u(gen), u(gen)});
        auto rho = spatial_density(pos, 10.0, 4);
        double avg = 0.0;
        for (double r : rho) avg += r;
        avg /= static_cast<double>(rho.size());
        CHECK(avg == doctest::Approx(4000.0 / 1000.0));
    }
}

TEST_CASE("snapshot csv round trip preserves values bit-for-bit") {
    VelocityGrid g(6, 3.0);
    auto f = maxwellian(g, 1.3, {0.2, -0.4, 0.1}, 0.9);
    std::stringstream ss;
    write_snapshot_csv(ss, f);
    std::string header;
    std::getline(ss, header);
    CHECK(header == "vx,vy,vz,f");
    ss.seekg(0);
    auto f2 = read_snapshot_csv(ss, g);
    for (std::size_t i = 0; i < f.values.size(); ++i) CHECK(f[i] == f2[i]);
}

TEST_CASE("pairwise sum is deterministic and accurate") {
    std::vector<double> v(100000);
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    long double exact = 0.0;
    for (auto& x : v) {
        x = u(gen);
        exact += static_cast<long double>(x);
    }
    const double s1 = pairwise_sum(v);
    const double s2 = pairwise_sum(v);
    CHECK(s1 == s2);
    CHECK(std::abs(s1 - static_cast<double>(exact)) < 1e-10);
}

TEST_CASE("adaptive quadrature basics") {
    auto q1 = integrate_adaptive([](double x) { return x * x; }, 0.0, 1.0);
    CHECK(q1.value == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    auto q2 = integrate_to_infinity([](double x) { return std::exp(-x * x); }, 0.0);
    CHECK(q2.value == doctest::Approx(std::sqrt(M_PI) / 2.0).epsilon(1e-10));
    auto q3 = integrate_tanh_sinh([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0);
    CHECK(q3.value == doctest::Approx(2.0).epsilon(1e-10));
    // Oscillatory tail with closed form: ∫_0^∞ e^{-r} sin(kr) dr = k/(1+k^2).
    auto q4 = integrate_sin_tail([](double r) { return std::exp(-r); }, 2.0, 0.0);
    CHECK(q4.value == doctest::Approx(2.0 / 5.0).epsilon(1e-9));
    // Slowly decaying: ∫_0^∞ sin(r)/r dr = pi/2 needs the acceleration.
    auto q5 = integrate_sin_tail([](double r) { return 1.0 / r; }, 1.0, 1e-12);
    CHECK(q5.value == doctest::Approx(M_PI / 2.0).epsilon(1e-8));
}

TEST_CASE("symmetric eigen and psd sqrt") {
    Mat3 d = Mat3::zero();
    d(0, 0) = 3.0;
    d(1, 1) = 1.0;
    d(2, 2) = 2.0;
    const Vec3 axis = normalized(Vec3{1, 2, -1});
    // 90-degree rotation around `axis` (Rodrigues with cos=0, sin=1).
    auto rotate = [&](const Vec3& v) { return cross(axis, v) + axis * dot(axis, v); };
    Mat3 r;
    const Vec3 cols[3] = {rotate({1, 0, 0}), rotate({0, 1, 0}), rotate({0, 0, 1})};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) r(i, j) = cols[j][i];
    Mat3 m = r * d * transpose(r);
    auto e = symmetric_eigen(m);
    CHECK(e.values[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(e.values[1] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(e.values[2] == doctest::Approx(3.0).epsilon(1e-12));
    Mat3 c = psd_sqrt(m);
    Mat3 cc = c * transpose(c);
    for (std::size_t i = 0; i < 9; ++i) CHECK(cc.a[i] == doctest::Approx(m.a[i]).epsilon(1e-10));
}

TEST_CASE("rng streams and distributions") {
    Rng r1(42), r2(42);
    for (int i = 0; i < 100; ++i) CHECK(r1.next_u64() == r2.next_u64());
    CHECK(derive_stream_seed(1, 2) != derive_stream_seed(1, 3));
    CHECK(derive_stream_seed(1, 2) != derive_stream_seed(2, 2));

    Rng r(123);
    double sum = 0.0, sum2 = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double x = r.normal();
        sum += x;
        sum2 += x * x;
    }
    CHECK(std::abs(sum / n) < 0.01);
    CHECK(std::abs(sum2 / n - 1.0) < 0.02);

    double psum = 0.0, psum2 = 0.0;
    const int m = 20000;
    for (int i = 0; i < m; ++i) {
        const double c = static_cast<double>(r.poisson(100.0));
        psum += c;
        psum2 += c * c;
    }
    const double mean = psum / m;
    const double var = psum2 / m - mean * mean;
    CHECK(std::abs(mean - 100.0) < 0.5);
    CHECK(std::abs(var - 100.0) < 5.0);
}

namespace {

std::complex<double> faddeeva_quadrature_oracle(std::complex<double> z) {
    // w(z) = (i/pi) ∫ e^{-t^2}/(z - t) dt for Im z > 0.
    auto re = integrate_adaptive(
        [&](double t) { return (std::exp(-t * t) / (z - t)).real(); }, -12.0, 12.0, 1e-13);
    auto im = integrate_adaptive(
        [&](double t) { return (std::exp(-t * t) / (z - t)).imag(); }, -12.0, 12.0, 1e-13);
    return std::complex<double>(0, 1) / M_PI * std::complex<double>(re.value, im.value);
}

}  // namespace

TEST_CASE("faddeeva function against independent oracles") {
    CHECK(std::abs(faddeeva_w({0, 0}) - std::complex<double>(1, 0)) < 1e-14);

    SUBCASE("imaginary axis: w(iy) = e^{y^2} erfc(y)") {
        for (double y : {0.1, 0.5, 1.0, 2.0, 4.0, 7.0, 15.0}) {
            const double expect = std::exp(y * y) * std::erfc(y);
            const auto got = faddeeva_w({0, y});
            CHECK(std::abs(got.imag()) < 1e-13 * expect);
            CHECK(std::abs(got.real() - expect) < 1e-12 * expect);
        }
    }

    SUBCASE("real axis: Re w(x) = e^{-x^2}") {
        for (double x : {0.3, 1.0, 2.5, 4.0, 6.0}) {
            CHECK(std::abs(faddeeva_w({x, 0}).real() - std::exp(-x * x)) < 1e-12);
        }
    }

    SUBCASE("interior points against direct quadrature") {
        const std::complex<double> pts[] = {
            {0.5, 0.5}, {2.0, 1.0}, {3.0, 0.3}, {1.0, 3.0}, {6.0, 0.05}};
        for (auto z : pts) {
            const auto got = faddeeva_w(z);
            const auto want = faddeeva_quadrature_oracle(z);
            CHECK(std::abs(got - want) < 1e-10 * std::abs(want));
        }
    }

    SUBCASE("branch agreement near the switch radius") {
        for (double phi = 0.05; phi < M_PI; phi += 0.3) {
            const std::complex<double> z =
                12.0 * std::complex<double>(std::cos(phi), std::sin(phi));
            const auto q = faddeeva_quadrature_oracle(z);
            CHECK(std::abs(faddeeva_w(z * 0.99) - faddeeva_quadrature_oracle(z * 0.99)) <
                  1e-10 * std::abs(q));
            CHECK(std::abs(faddeeva_w(z * 1.01) - faddeeva_quadrature_oracle(z * 1.01)) <
                  1e-10 * std::abs(q));
        }
    }

    SUBCASE("reflection identity w(z) + w(-z) = 2 e^{-z^2}") {
        const std::complex<double> pts[] = {{0.7, -0.2}, {1.5, -1.0}, {-2.0, -0.4}};
        for (auto z : pts) {
            const auto lhs = faddeeva_w(z) + faddeeva_w(-z);
            const auto rhs = 2.0 * std::exp(-z * z);
            CHECK(std::abs(lhs - rhs) < 1e-12 * std::abs(rhs));
        }
    }

    SUBCASE("plasma Z large-argument expansion") {
        // Z(xi) ~ -1/xi - 1/(2 xi^3) for large |xi| off the real axis.
        const std::complex<double> xi(0.0, 10.0);
        const auto z = plasma_z(xi);
        const auto asym = -1.0 / xi - 0.5 / (xi * xi * xi);
        CHECK(std::abs(z - asym) < 1e-2 * std::abs(z));
        CHECK(std::abs(plasma_z_derivative(xi) + 2.0 * (1.0 + xi * z)) < 1e-14);
    }
}
