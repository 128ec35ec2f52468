#include "random.hpp"

#include "error.hpp"

#include <limits>
#include <numeric>
#include <utility>
#include <vector>

namespace tablecast {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) {
        throw Error(ErrorCode::InvalidArgument, "random bound must be positive");
    }
    // Reject the top partial block so every residue is equally likely.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = engine_();
    while (x >= limit) {
        x = engine_();
    }
    return x % bound;
}

Ranking random_ranking(std::size_t n, Rng& rng) {
    std::vector<std::int32_t> places(n);
    std::iota(places.begin(), places.end(), 1);
    for (std::size_t i = n; i > 1; --i) {
        const auto j = static_cast<std::size_t>(rng.below(i));
        std::swap(places[i - 1], places[j]);
    }
    return Ranking::from_places(std::move(places));
}

}  // namespace tablecast
