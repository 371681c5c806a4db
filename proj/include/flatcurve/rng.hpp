#ifndef FLATCURVE_RNG_HPP
#define FLATCURVE_RNG_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace flatcurve {

// All library randomness flows through mt19937_64 plus the helpers below.
// The standard pins the mt19937_64 output sequence, and the helpers avoid
// std::*_distribution, whose output differs between standard libraries.
using Rng = std::mt19937_64;

// Per-trial seed derivation: splitmix64 of (master, index). Distinct indices
// give independent-looking streams without coordinating the trials.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master ^ splitmix64(index + 0x9E3779B97F4A7C15ULL));
}

// Unbiased integer in [0, bound) by rejection.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound == 0)
        throw std::invalid_argument("uniform_below: bound must be positive");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return draw % bound;
}

inline double uniform01(Rng& rng) {
    // 53 random bits into [0,1).
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// k distinct elements of pool, order randomized (partial Fisher-Yates).
template <typename T>
std::vector<T> sample_without_replacement(Rng& rng, std::vector<T> pool, std::size_t k) {
    if (k > pool.size())
        throw std::invalid_argument("sample_without_replacement: k exceeds pool size");
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(uniform_below(rng, pool.size() - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
}

}  // namespace flatcurve

#endif
