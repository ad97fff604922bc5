#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace ouvol {

/// splitmix64 step; used to derive stream seeds from a base seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Seeded random stream. The generator is mt19937_64; uniforms come from a
/// 53-bit mantissa draw, Gaussians from the Marsaglia polar method, and
/// Poisson counts from exponential inter-arrival accumulation, so the draw
/// sequence for a given seed is fixed by this file alone.
/// fork(label) derives an independent stream via splitmix64; identical
/// (seed, label) pairs always give identical streams.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(init_state(seed)) {}

    std::uint64_t seed() const { return seed_; }

    Rng fork(std::uint64_t label) const {
        std::uint64_t s = seed_ ^ (0xD2B74407B1CE6E93ULL * (label + 1));
        return Rng(splitmix64(s));
    }

    /// Uniform on (0, 1); never returns 0 or 1.
    double uniform() {
        double u = ((engine_() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
        return u;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        have_spare_ = true;
        return u * m;
    }

    double exponential() { return -std::log(uniform()); }

    /// Exact Poisson count via unit-exponential arrivals; O(mean) time.
    std::uint64_t poisson(double mean) {
        std::uint64_t k = 0;
        double acc = exponential();
        while (acc <= mean) {
            ++k;
            acc += exponential();
        }
        return k;
    }

private:
    static std::uint64_t init_state(std::uint64_t seed) {
        std::uint64_t s = seed;
        return splitmix64(s);
    }
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace ouvol
