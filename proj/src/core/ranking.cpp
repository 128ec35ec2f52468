#include "ranking.hpp"

#include "error.hpp"

#include <numeric>
#include <string>

namespace tablecast {

bool is_permutation_of_1_to_n(std::span<const std::int32_t> places) {
    const auto n = static_cast<std::int64_t>(places.size());
    std::vector<bool> seen(places.size(), false);
    for (const auto p : places) {
        if (p < 1 || p > n || seen[p - 1]) {
            return false;
        }
        seen[p - 1] = true;
    }
    return true;
}

Ranking Ranking::from_places(std::vector<std::int32_t> places) {
    if (places.size() < 2) {
        throw Error(ErrorCode::Domain,
                    "a ranking needs at least 2 places, got " + std::to_string(places.size()));
    }
    if (!is_permutation_of_1_to_n(places)) {
        throw Error(ErrorCode::NotPermutation,
                    "places are not a permutation of 1.." + std::to_string(places.size()));
    }
    return Ranking(std::move(places));
}

Ranking Ranking::identity(std::size_t n) {
    std::vector<std::int32_t> places(n);
    std::iota(places.begin(), places.end(), 1);
    return from_places(std::move(places));
}

Ranking Ranking::reversal(std::size_t n) {
    std::vector<std::int32_t> places(n);
    for (std::size_t i = 0; i < n; ++i) {
        places[i] = static_cast<std::int32_t>(n - i);
    }
    return from_places(std::move(places));
}

Ranking Ranking::inverse() const {
    std::vector<std::int32_t> inv(places_.size());
    for (std::size_t i = 0; i < places_.size(); ++i) {
        inv[places_[i] - 1] = static_cast<std::int32_t>(i + 1);
    }
    return Ranking(std::move(inv));
}

}  // namespace tablecast
