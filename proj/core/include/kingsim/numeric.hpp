#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "kingsim/rational.hpp"

namespace kingsim {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Stable child-seed derivation: three chained splitmix64 rounds folding in
/// `a` and `b`. Used for per-run seeds so parallel sweeps stay reproducible.
inline std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t a, std::uint64_t b) {
    return splitmix64(splitmix64(splitmix64(parent) ^ a) ^ b);
}

/// Uniform integer in [0, n), rejection-sampled so the result only depends
/// on the engine stream (no library-specific distribution behaviour).
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t rem = max % n;
    if (rem == n - 1) return rng() % n;  // 2^64 divisible by n
    const std::uint64_t cutoff = max - rem;  // == 2^64 - 2^64 % n
    std::uint64_t x = rng();
    while (x >= cutoff) x = rng();
    return x % n;
}

/// Uniform double in [0,1) from the top 53 bits of the stream.
inline double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Floyd's algorithm: k distinct values sampled uniformly from [0, n),
/// returned sorted.
inline std::vector<int> sample_k(int n, int k, std::mt19937_64& rng) {
    std::vector<bool> in(static_cast<std::size_t>(n), false);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(k));
    for (int j = n - k; j < n; ++j) {
        int t = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(j) + 1));
        if (in[static_cast<std::size_t>(t)]) t = j;
        in[static_cast<std::size_t>(t)] = true;
        out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Exact integer cube root if n is a perfect cube.
inline bool exact_cbrt(std::int64_t n, std::int64_t& root) {
    std::int64_t c = std::llround(std::cbrt(static_cast<double>(n)));
    for (std::int64_t k = c - 1; k <= c + 1; ++k) {
        if (k >= 0 && k * k * k == n) { root = k; return true; }
    }
    return false;
}

/// ceil(n^{2/3}); exact for perfect cubes.
inline int ceil_n23(int n) {
    std::int64_t c = 0;
    if (exact_cbrt(n, c)) return static_cast<int>(c * c);
    long double v = std::pow(static_cast<long double>(n), 2.0L / 3.0L);
    auto r = static_cast<std::int64_t>(std::ceil(v - 1e-9L));
    while (static_cast<long double>(r) * r * r < static_cast<long double>(n) * n) ++r;
    return static_cast<int>(r);
}

/// ceil(n^{1/3}); exact for perfect cubes.
inline int ceil_cbrt(int n) {
    std::int64_t c = 0;
    if (exact_cbrt(n, c)) return static_cast<int>(c);
    std::int64_t r = std::llround(std::ceil(std::cbrt(static_cast<double>(n)) - 1e-9));
    while (r * r * r < n) ++r;
    while ((r - 1) * (r - 1) * (r - 1) >= n) --r;
    return static_cast<int>(r);
}

/// ceil(kappa * n^{2/3}); exact whenever n is a perfect cube.
inline std::size_t ceil_frac_n23(const Rational& kappa, int n) {
    std::int64_t c = 0;
    if (exact_cbrt(n, c)) {
        Rational v = kappa * Rational(c * c);
        return static_cast<std::size_t>(v.ceil());
    }
    long double v = static_cast<long double>(kappa.num()) / kappa.den() *
                    std::pow(static_cast<long double>(n), 2.0L / 3.0L);
    return static_cast<std::size_t>(std::ceil(v - 1e-9L));
}

}  // namespace kingsim
