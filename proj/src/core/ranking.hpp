#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace tablecast {

/// A table prediction expressed against the true final order.
///
/// Entry i (0-based here, 1-based in every file format) holds the predicted
/// place of the team that actually finished in position i+1. Construction
/// enforces that the places form a bijection on {1, ..., n} with n >= 2.
class Ranking {
public:
    static Ranking from_places(std::vector<std::int32_t> places);
    static Ranking identity(std::size_t n);
    static Ranking reversal(std::size_t n);

    std::size_t size() const noexcept { return places_.size(); }
    std::int32_t operator[](std::size_t i) const { return places_[i]; }
    std::span<const std::int32_t> places() const noexcept { return places_; }

    /// Ranking in the opposite direction: entry j holds the true position of
    /// the team predicted to finish j+1.
    Ranking inverse() const;

    friend bool operator==(const Ranking&, const Ranking&) = default;

private:
    explicit Ranking(std::vector<std::int32_t> places) : places_(std::move(places)) {}

    std::vector<std::int32_t> places_;
};

bool is_permutation_of_1_to_n(std::span<const std::int32_t> places);

}  // namespace tablecast
