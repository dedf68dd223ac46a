#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace mdpcore {

// All randomized components draw through these helpers instead of the
// std::uniform_* distributions, whose output is implementation-defined.
// Identical seeds must yield identical runs on any standard library.

inline std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

inline double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Picks an index with probability proportional to weights[i]. `total` must be
/// the positive sum of the weights.
inline std::size_t pick_weighted(std::mt19937_64& rng, const std::vector<double>& weights,
                                 double total) {
    double u = uniform_unit(rng) * total;
    double acc = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] <= 0.0) {
            continue;
        }
        last_positive = i;
        acc += weights[i];
        if (u < acc) {
            return i;
        }
    }
    return last_positive;
}

}  // namespace mdpcore
