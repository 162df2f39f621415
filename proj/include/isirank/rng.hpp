#pragma once

#include <cmath>
#include <cstdint>

namespace isirank {

/// Counter-style SplitMix64 generator. Cheap to seed, so every independent
/// unit of work gets its own stream via derive_stream and results do not
/// depend on scheduling.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t s = 0) : state(s) {}

    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in (0,1]; never 0 so it is safe under log().
    double uniform() {
        return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
    }

    /// Box-Muller pair of independent N(0,1) draws.
    void normal_pair(double& z0, double& z1) {
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        z0 = r * std::cos(a);
        z1 = r * std::sin(a);
    }

    /// Uniform integer in [0, n); n must be a power of two for exactness,
    /// otherwise rejection sampling keeps it unbiased.
    std::uint64_t below(std::uint64_t n) {
        if ((n & (n - 1)) == 0) return next() & (n - 1);
        const std::uint64_t lim = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
        std::uint64_t v = next();
        while (v >= lim) v = next();
        return v % n;
    }
};

/// Documented stream derivation: stream(seed, a, b) feeds the run seed and
/// the two work coordinates (e.g. SNR index, trial index) through two mix
/// rounds. Identical coordinates always yield identical streams.
inline SplitMix64 derive_stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    std::uint64_t h = SplitMix64::mix(seed ^ (0xd1b54a32d192ed03ULL * (a + 1)));
    h = SplitMix64::mix(h ^ (0x8bb84b93962eacc9ULL * (b + 1)));
    return SplitMix64(h);
}

} // namespace isirank
