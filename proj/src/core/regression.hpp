#pragma once

#include "league.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tablecast {

struct OlsFit {
    double beta0 = 0.0;  // intercept
    double beta1 = 0.0;  // slope
    /// Empty when y has zero variance (R^2 undefined).
    std::optional<double> r_squared;
    std::size_t n_points = 0;
};

/// Ordinary least squares of y on x, computed on centered data.
///
/// Requires equal lengths >= 3. Throws ErrorCode::DegeneratePredictor when x
/// is constant. R^2 = 1 - SSres/SStot; an overshoot of [0, 1] by at most
/// 1e-12 is clamped, anything larger is reported as a logic error.
OlsFit simple_ols(std::span<const double> x, std::span<const double> y);

enum class PredictorKind { TableRank, GoalDifference };

std::string_view to_string(PredictorKind kind) noexcept;
std::optional<PredictorKind> predictor_kind_from_string(std::string_view name) noexcept;

struct R2Point {
    std::uint32_t round = 0;
    std::optional<double> r_squared;  // empty for a degenerate round
};

struct R2Curve {
    std::string season;
    PredictorKind kind = PredictorKind::TableRank;
    std::vector<R2Point> points;
};

/// One regression per round: y is the final position 1..n, x is either the
/// round-r table rank or goal difference of the same team. Rounds where x or
/// y is constant carry an empty value.
R2Curve r2_curve(const SeasonDataset& dataset, PredictorKind kind);

/// Smallest round whose R^2 reaches `threshold` (in (0, 1]).
std::optional<std::uint32_t> threshold_round(const R2Curve& curve, double threshold);

}  // namespace tablecast
