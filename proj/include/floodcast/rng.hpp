#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace floodcast {

// All sampling below is built on std::mt19937_64 plus fixed integer/float
// conversions, so sequences are identical across platforms and compilers.
// (std::uniform_*_distribution is implementation-defined and avoided.)

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic combination of a base seed with a stream index (round number,
// tree index, catchment hash, ...). Distinct streams stay decorrelated.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(seed ^ splitmix64(stream));
}

inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

// Uniform double in [0, 1) from the top 53 bits.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n). Modulo bias is ~n/2^64 and irrelevant here;
// what matters is that the mapping is fixed.
inline std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
    return static_cast<std::size_t>(rng() % n);
}

// Standard normal via Box-Muller on the uniform above.
inline double standard_normal(std::mt19937_64& rng) {
    double u1 = uniform01(rng);
    if (u1 < 1e-300) u1 = 1e-300;
    const double u2 = uniform01(rng);
    constexpr double two_pi = 6.283185307179586476925286766559;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

// First k entries of a partial Fisher-Yates shuffle of [0, n), returned in
// ascending order.
inline std::vector<int> sample_without_replacement(std::mt19937_64& rng, int n, int k) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
    if (k > n) k = n;
    for (int i = 0; i < k; ++i) {
        const std::size_t j = static_cast<std::size_t>(i) +
                              uniform_index(rng, static_cast<std::size_t>(n - i));
        std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    }
    pool.resize(static_cast<std::size_t>(k));
    std::sort(pool.begin(), pool.end());
    return pool;
}

// Bootstrap resample of size n (with replacement), ascending.
inline std::vector<int> bootstrap_sample(std::mt19937_64& rng, int n) {
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] =
            static_cast<int>(uniform_index(rng, static_cast<std::size_t>(n)));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace floodcast
