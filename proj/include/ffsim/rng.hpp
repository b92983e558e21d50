#pragma once

#include <cstdint>
#include <random>

namespace ffsim {

/// Seeded generator with a portable uniform mapping. mt19937_64 output is
/// fixed by the standard, and the explicit 53-bit mapping avoids the
/// implementation-defined behavior of std::uniform_real_distribution, so
/// trajectories replay bit-identically for a given seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n).
    std::uint64_t uniform_index(std::uint64_t n) {
        return n == 0 ? 0 : static_cast<std::uint64_t>(uniform() * static_cast<double>(n));
    }

private:
    std::mt19937_64 gen_;
};

/// Derive an independent stream from a base seed and a stream tag (splitmix64
/// finalizer), so spawn sampling, marker scattering and leader election do not
/// share state.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (tag + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace ffsim
