#pragma once

#include <cstdint>

namespace atiyah {

/// SplitMix64. Substreams are derived from (seed, index) so every sample is
/// reproducible in isolation, independent of worker count.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state) : state_(state) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

private:
    std::uint64_t state_;
};

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Counter-based substream for sample `index` of stream `seed`.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(mix64(seed ^ 0x6C62272E07BB0142ULL) ^
                      mix64(index * 0x9E3779B97F4A7C15ULL + 0x2545F4914F6CDD1DULL));
}

}  // namespace atiyah
