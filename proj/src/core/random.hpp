#pragma once

#include "ranking.hpp"

#include <cstdint>
#include <random>

namespace tablecast {

/// SplitMix64 finalizer, used to derive independent stream seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

/// Seedable generator whose output is fully specified: mt19937_64 plus a
/// rejection-sampled bounded draw, so sequences match across standard
/// library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [0, bound). `bound` must be positive.
    std::uint64_t below(std::uint64_t bound);

    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

/// Fisher-Yates shuffle of the identity; uniform over all n! rankings.
Ranking random_ranking(std::size_t n, Rng& rng);

}  // namespace tablecast
