#include "doctest.h"

#include <cmath>

#include "kinet/potential.hpp"
#include "kinet/quadrature.hpp"
#include "kinet/scattering.hpp"

using namespace kinet;
using namespace kinet::potentials;

TEST_CASE("potential evaluation") {
    SUBCASE("exponential profile with amplitude and range") {
        auto spec = PotentialSpec::smooth(SmoothProfile::exponential, 0.1, 1.0);
        CHECK(evaluate_potential(spec, {2, 0, 0}) == doctest::Approx(0.1 * std::exp(-2.0)));
        CHECK(evaluate_potential(spec, {0, 0, 0}) == doctest::Approx(0.1));
    }
    SUBCASE("zero amplitude is identically zero") {
        auto spec = PotentialSpec::smooth(SmoothProfile::gaussian, 0.0, 2.0);
        CHECK(evaluate_potential(spec, {1, 2, 3}) == 0.0);
        CHECK(evaluate_potential(spec, {0, 0, 0}) == 0.0);
    }
    SUBCASE("singular families reject the origin") {
        auto spec = PotentialSpec::power(1.0);
        CHECK_THROWS_AS(evaluate_potential(spec, {0, 0, 0}), DomainError);
        CHECK(evaluate_potential(spec, {2, 0, 0}) == doctest::Approx(0.5));
    }
    SUBCASE("hard sphere: zero outside contact, contact signalled inside") {
        auto spec = PotentialSpec::hard(0.5);
        CHECK(evaluate_potential(spec, {1.5, 0, 0}) == 0.0);
        CHECK_THROWS_AS(evaluate_potential(spec, {0.9, 0, 0}), DomainError);
    }
    SUBCASE("invariants") {
        CHECK_THROWS_AS(PotentialSpec::power(0.4), ParameterError);
        CHECK_THROWS_AS(PotentialSpec::smooth(SmoothProfile::exponential, -1.0, 1.0),
                        ParameterError);
        CHECK_THROWS_AS(PotentialSpec::smooth(SmoothProfile::exponential, 1.0, 0.0),
                        ParameterError);
    }
    SUBCASE("force matches a finite difference of the potential") {
        auto spec = PotentialSpec::smooth(SmoothProfile::gaussian, 0.7, 1.3);
        const Vec3 x{0.8, -0.5, 0.3};
        const Vec3 f = potential_force(spec, x);
        const double h = 1e-6;
        for (std::size_t a = 0; a < 3; ++a) {
            Vec3 xp = x, xm = x;
            xp[a] += h;
            xm[a] -= h;
            const double fd =
                -(evaluate_potential(spec, xp) - evaluate_potential(spec, xm)) / (2 * h);
            CHECK(f[a] == doctest::Approx(fd).epsilon(1e-6));
        }
    }
}

TEST_CASE("fourier transforms: closed forms and quadrature oracle") {
    SUBCASE("screened coulomb closed form at k=1") {
        auto fp = fourier_transform(PotentialSpec::screened(1.0));
        const double want = std::pow(2.0 * M_PI, -1.5) / 2.0;
        CHECK(fp(1.0) == doctest::Approx(want).epsilon(1e-13));
        CHECK(fp.provenance() == FourierPotential::Provenance::analytic);
    }
    SUBCASE("gaussian profile at k=0") {
        auto fp = fourier_transform(PotentialSpec::smooth(SmoothProfile::gaussian));
        CHECK(fp(0.0) == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(fp(1.3) == doctest::Approx(std::exp(-0.5 * 1.69)).epsilon(1e-13));
    }
    SUBCASE("zero amplitude transforms to zero") {
        auto fp = fourier_transform(PotentialSpec::smooth(SmoothProfile::exponential, 0.0, 1.0));
        CHECK(fp(0.7) == 0.0);
    }
    SUBCASE("coulomb is the screened limit") {
        auto fp = fourier_transform(PotentialSpec::coulomb());
        const double want = 4.0 * M_PI * std::pow(2.0 * M_PI, -1.5);
        CHECK(fp(2.0) == doctest::Approx(want / 4.0).epsilon(1e-13));
        CHECK(fp.kappa_ir_divergent());
        CHECK(fp.kappa_uv_divergent());
    }
    SUBCASE("quadrature route agrees with analytic forms to 1e-8") {
        const PotentialSpec specs[] = {
            PotentialSpec::smooth(SmoothProfile::exponential, 0.8, 1.7),
            PotentialSpec::smooth(SmoothProfile::gaussian, 1.2, 0.6),
            PotentialSpec::screened(2.0, 1.5, 1.1),
            PotentialSpec::power(1.5),
            PotentialSpec::power(2.5),
        };
        for (const auto& spec : specs) {
            auto analytic = fourier_transform(spec);
            auto numeric = fourier_transform_quadrature(spec, 1e-10);
            for (double k = 1e-2; k <= 100.0; k *= 10.0) {
                const double a = analytic(k);
                const double q = numeric(k);
                // Oscillatory-cancellation floor: the radial integrand is
                // O(A L^2 / k) in magnitude, so transforms that decay more
                // than ~13 digits below it cannot be resolved relatively.
                const double floor = 1e-12 * spec.amplitude * spec.range * spec.range / k;
                CHECK(std::abs(a - q) <= 1e-8 * std::abs(a) + floor);
            }
        }
    }
    SUBCASE("rescaling rule: amplitude and range enter as A L^3 phi(kL)") {
        auto base = fourier_transform(PotentialSpec::smooth(SmoothProfile::exponential));
        auto scaled = fourier_transform(PotentialSpec::smooth(SmoothProfile::exponential, 0.3, 2.5));
        const double k = 0.77;
        CHECK(scaled(k) == doctest::Approx(0.3 * 2.5 * 2.5 * 2.5 * base(k * 2.5)).epsilon(1e-13));
    }
    SUBCASE("divergent radial integrals are rejected") {
        CHECK_THROWS_AS(fourier_transform_quadrature(PotentialSpec::power(0.9)), DivergenceError);
        CHECK_THROWS_AS(fourier_transform(PotentialSpec::hard(0.5)), DomainError);
    }
}

namespace {

// Two-body trajectory oracle: integrate the relative coordinate
// mu Y'' = -grad Phi(Y) with RK4 from far upstream and read the asymptotic
// deflection of W = Y'.
double deflection_by_trajectory(const PotentialSpec& spec, double u, double b, double mu) {
    Vec3 y{-40.0, b, 0.0};
    Vec3 w{u, 0.0, 0.0};
    const double dt = 2e-4;
    auto acc = [&](const Vec3& pos) { return potential_force(spec, pos) / mu; };
    const int steps = static_cast<int>(2.0 * 40.0 / u / dt);
    for (int s = 0; s < steps; ++s) {
        const Vec3 k1v = acc(y);
        const Vec3 k1x = w;
        const Vec3 k2v = acc(y + 0.5 * dt * k1x);
        const Vec3 k2x = w + 0.5 * dt * k1v;
        const Vec3 k3v = acc(y + 0.5 * dt * k2x);
        const Vec3 k3x = w + 0.5 * dt * k2v;
        const Vec3 k4v = acc(y + dt * k3x);
        const Vec3 k4x = w + dt * k3v;
        y += dt / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
        w += dt / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    }
    return std::acos(dot(normalized(w), Vec3{1, 0, 0}));
}

}  // namespace

TEST_CASE("deflection angles") {
    SUBCASE("hard sphere geometry") {
        auto spec = PotentialSpec::hard(0.5);
        CHECK(scattering_cross_section(spec, 1.0, 0.0) == doctest::Approx(M_PI));
        CHECK(scattering_cross_section(spec, 1.0, 1.0) == 0.0);
        CHECK(scattering_cross_section(spec, 1.0, 1.7) == 0.0);
        CHECK(scattering_cross_section(spec, 1.0, 0.5) == doctest::Approx(2.0 * std::acos(0.5)));
    }
    SUBCASE("repulsive exponential against the trajectory oracle") {
        auto spec = PotentialSpec::smooth(SmoothProfile::exponential);
        const double chi = scattering_cross_section(spec, 1.0, 1.0);
        const double oracle = deflection_by_trajectory(spec, 1.0, 1.0, 0.5);
        CHECK(std::abs(chi - oracle) < 1e-4);
    }
    SUBCASE("reduced mass 1 (fixed scatterer) against the oracle") {
        auto spec = PotentialSpec::smooth(SmoothProfile::exponential, 0.3, 1.0);
        const double chi = scattering_cross_section(spec, 1.0, 0.7, 1.0);
        const double oracle = deflection_by_trajectory(spec, 1.0, 0.7, 1.0);
        CHECK(std::abs(chi - oracle) < 1e-4);
    }
    SUBCASE("monotone in b for a repulsive monotone potential") {
        auto spec = PotentialSpec::smooth(SmoothProfile::exponential);
        double prev = M_PI + 1.0;
        for (double b : {0.2, 0.5, 1.0, 1.5, 2.2, 3.0}) {
            const double chi = scattering_cross_section(spec, 1.0, b);
            CHECK(chi < prev);
            prev = chi;
        }
    }
    SUBCASE("hard-sphere transport cross section by 1d quadrature") {
        const double a = 0.5;
        auto spec = PotentialSpec::hard(a);
        auto q = integrate_adaptive(
            [&](double b) {
                return (1.0 - std::cos(scattering_cross_section(spec, 1.0, b))) * b;
            },
            0.0, 2.0 * a, 1e-10);
        // chi(b) = 2 acos(b/2a): \int (1 - cos chi) b db = 2 a^2.
        CHECK(q.value == doctest::Approx(2.0 * a * a).epsilon(1e-6));
    }
    SUBCASE("parameter errors") {
        auto spec = PotentialSpec::hard(0.5);
        CHECK_THROWS_AS(scattering_cross_section(spec, 0.0, 0.1), ParameterError);
        CHECK_THROWS_AS(scattering_cross_section(spec, 1.0, -0.1), ParameterError);
    }
}

TEST_CASE("differential cross section table") {
    // Hard-sphere differential cross section is exactly a^2, flat in chi.
    auto spec = PotentialSpec::hard(0.5);
    DifferentialCrossSection sigma(spec, 1.0, 0.5, 512);
    for (double chi : {0.5, 1.0, 1.8, 2.6}) {
        CHECK(sigma(chi) == doctest::Approx(0.25).epsilon(2e-2));
    }
}
