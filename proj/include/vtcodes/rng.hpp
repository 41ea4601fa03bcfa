#pragma once

#include <cstdint>

namespace vtcodes {

/// splitmix64: the fixed, portable generator behind every random operation
/// here. Identical seeds give identical streams on every platform, which is
/// what makes fuzz witnesses replayable. Output function from Steele et al.'s
/// SplittableRandom / Vigna's public-domain reference.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Exactly uniform draw from [0, range) via Lemire's multiply-with-
    // rejection. range must be nonzero.
    std::uint64_t bounded(std::uint64_t range) noexcept {
        unsigned __int128 m = static_cast<unsigned __int128>(next()) * range;
        auto low = static_cast<std::uint64_t>(m);
        if (low < range) {
            const std::uint64_t cutoff = (0 - range) % range;  // 2^64 mod range
            while (low < cutoff) {
                m = static_cast<unsigned __int128>(next()) * range;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

private:
    std::uint64_t state_;
};

// The documented sub-stream rule: stream `index` under `seed` starts at the
// first output of SplitMix64(seed + index * golden ratio). Used to give each
// fuzz trial an independent, order-free seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    return SplitMix64(seed + index * 0x9E3779B97F4A7C15ULL).next();
}

}  // namespace vtcodes
