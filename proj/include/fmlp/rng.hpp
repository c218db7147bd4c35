#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace fmlp {

// Uniform double in [0, 1) from the top 53 bits of one engine draw. The
// standard uniform_real_distribution is not bit-identical across standard
// library implementations; this mapping is, which the reproducibility
// contracts rely on.
inline double uniform_unit(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Uniform double in [-half_width, +half_width).
inline double uniform_symmetric(std::mt19937_64& gen, double half_width) {
    return (2.0 * uniform_unit(gen) - 1.0) * half_width;
}

// splitmix64 finalizer: cheap, well-mixed 64-bit hash step used to derive
// independent seeds from structured run coordinates.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace fmlp
