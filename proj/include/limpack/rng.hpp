#pragma once

#include <cstdint>

namespace limpack {

// SplitMix64 (Steele, Lea, Flood 2014). Every seeded operation in the
// library draws from this stream, so identical seeds reproduce bit for
// bit across platforms and standard libraries.
inline uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline constexpr uint64_t kSplitMixGamma = 0x9e3779b97f4a7c15ULL;

class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += kSplitMixGamma;
        return mix64(state_);
    }

    // Uniform in [0, 1), 53 random bits.
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // Uniform in [0, bound), rejection sampled (no modulo bias).
    uint64_t next_below(uint64_t bound) {
        const uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

private:
    uint64_t state_;
};

// The (index+1)-th output of a SplitMix64 stream seeded with `master`.
// Used to hand independent sub-seeds to restarts and experiment rows.
inline uint64_t derive_seed(uint64_t master, uint64_t index) {
    return mix64(master + (index + 1) * kSplitMixGamma);
}

}  // namespace limpack
