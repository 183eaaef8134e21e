#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "bigmeans/core.hpp"

namespace bigmeans {

/// Engine used by every algorithm in the library.
using Rng = std::mt19937_64;

/// SplitMix64 finalizer; a bijection on 64-bit words.
constexpr std::uint64_t splitmix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/**
 * Seed for an independent stream keyed by (master, key...). The result
 * depends only on the key tuple, never on the order in which streams are
 * requested, so workers can run in any interleaving.
 */
constexpr std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> keys) noexcept {
    std::uint64_t h = splitmix64(master);
    for (const std::uint64_t key : keys) {
        h = splitmix64(h ^ splitmix64(key + 0x632be59bd9b4e019ull));
    }
    return h;
}

inline Rng make_stream(std::uint64_t master, std::initializer_list<std::uint64_t> keys) {
    return Rng(derive_seed(master, keys));
}

/// Uniform index in [0, n).
inline std::size_t uniform_index(Rng& rng, std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

/**
 * Uniform sample of `count` distinct row indices out of `population`,
 * returned in ascending order. Uses Floyd's algorithm, so the cost is
 * O(count log count) regardless of the population size. When count equals
 * the population the identity is returned without consuming randomness.
 */
std::vector<std::size_t> sample_indices(std::size_t population, std::size_t count, Rng& rng);

DataMatrix gather_rows(const DataMatrix& data, const std::vector<std::size_t>& indices);

/// Uniform sample without replacement of `count` rows of `data`.
DataMatrix draw_sample(const DataMatrix& data, std::size_t count, Rng& rng);

}  // namespace bigmeans
