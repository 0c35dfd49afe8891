#pragma once

#include <cstdint>

namespace cheapboot {

// splitmix64 finalizer; bijective on 64-bit words.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Seedable splittable stream (splitmix64 family). The same (seed, stream_id)
// pair yields a bit-identical sequence on every platform; distinct stream
// ids are mixed through the bijective finalizer above, giving statistically
// independent streams without coordination. Single-owner: never share one
// stream mutably across threads.
class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::uint64_t stream_id)
        : state_(mix64(seed ^ mix64(stream_id ^ 0x5851F42D4C957F2DULL))) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform on the open interval (0,1); safe to feed inverse CDFs.
    double next_uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Uniform integer in [0, bound); modulo bias removed by rejection.
    std::uint64_t next_index(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % bound;
    }

    double next_normal();                     // inverse-CDF transform
    double next_exponential(double rate);     // inverse-CDF transform
    double next_chi_square(int df);           // sum of df squared normals

private:
    std::uint64_t state_;
};

// Roles for per-repetition substreams. Each (repetition, role) pair owns a
// disjoint stream id, so parallel repetitions never share generator state.
enum class StreamRole : std::uint64_t {
    DataGen = 0,
    Resampling = 1,
    ComputationNoise = 2,
    SubsampleMn = 3,
    SubsampleBlb = 4,
    SubsampleSdb = 5,
    NestedResampling = 6,
    Oracle = 7,
};

inline RandomStream substream(std::uint64_t seed, std::uint64_t repetition, StreamRole role) {
    return RandomStream(seed, repetition * 8 + static_cast<std::uint64_t>(role));
}

}  // namespace cheapboot
