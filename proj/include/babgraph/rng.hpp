#pragma once

#include <cstdint>

namespace bab {

/// splitmix64. Every random choice in the library flows from a 64-bit seed
/// through this generator, so results are reproducible across platforms and
/// independent of any scheduling; the standard-library distributions are
/// avoided on purpose (their output is implementation-defined).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// uniform in [0, bound)
    std::uint64_t next_below(std::uint64_t bound) { return bound ? next() % bound : 0; }

    /// uniform in [lo, hi] inclusive
    int next_int(int lo, int hi) {
        return lo + static_cast<int>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// uniform in [0, 1)
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool next_bool(double p) { return next_double() < p; }

private:
    std::uint64_t state_;
};

/// Independent deterministic substream for (master, stream index).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    SplitMix64 rng(master ^ (0xA0761D6478BD642FULL * (stream + 1)));
    return rng.next();
}

}  // namespace bab
