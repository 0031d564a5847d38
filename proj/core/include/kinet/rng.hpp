#ifndef KINET_RNG_HPP
#define KINET_RNG_HPP

#include <cmath>
#include <cstdint>

namespace kinet {

/// SplitMix64 step; also used to derive independent stream seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Stream seed for trajectory `index` of a run seeded with `seed`.
/// Documented splitting rule: two SplitMix64 steps from (seed, index).
inline std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    s = a ^ (index + 0x9e3779b97f4a7c15ULL);
    return splitmix64(s);
}

/// xoshiro256** generator with explicit, platform-independent sampling
/// helpers. Trajectories demand bitwise reproducibility for fixed seeds,
/// so no implementation-defined std distributions are used.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t s = seed;
        for (auto& w : state_) w = splitmix64(s);
        have_spare_ = false;
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in (0, 1]; safe as a log() argument.
    double uniform_positive() { return 1.0 - uniform(); }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    /// Standard normal via Box-Muller (cached spare).
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u = uniform_positive();
        const double v = uniform();
        const double r = std::sqrt(-2.0 * std::log(u));
        const double c = std::cos(6.283185307179586477 * v);
        const double s = std::sin(6.283185307179586477 * v);
        spare_ = r * s;
        have_spare_ = true;
        return r * c;
    }

    /// Poisson sample. Knuth multiplication for small means; larger means
    /// use the additivity of the Poisson law over sub-blocks.
    std::uint64_t poisson(double mean) {
        std::uint64_t total = 0;
        while (mean > 32.0) {
            total += poisson_knuth(32.0);
            mean -= 32.0;
        }
        return total + poisson_knuth(mean);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t poisson_knuth(double mean) {
        if (mean <= 0.0) return 0;
        const double limit = std::exp(-mean);
        double p = 1.0;
        std::uint64_t k = 0;
        do {
            ++k;
            p *= uniform_positive();
        } while (p > limit);
        return k - 1;
    }

    std::uint64_t state_[4];
    double spare_ = 0.0;
    bool have_spare_;
};

}  // namespace kinet

#endif
