#pragma once

#include "league.hpp"
#include "permstats.hpp"
#include "regression.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tablecast {

/// Teams in predicted finishing order.
/// TableRank keeps the current table order; GoalDifference sorts by goal
/// difference, then points, goals for (all descending) and name ascending.
std::vector<std::string> predicted_order(const StandingsTable& table, PredictorKind strategy);

/// Converts a predicted team order into a Ranking indexed by `final_order`
/// (entry i = predicted place of the team that finished i-th).
Ranking order_to_ranking(std::span<const std::string> predicted,
                         std::span<const std::string> final_order);

Ranking predict_by_rank(const StandingsTable& table, std::span<const std::string> final_order);
Ranking predict_by_gd(const StandingsTable& table, std::span<const std::string> final_order);

struct ForecastRecord {
    std::uint32_t round = 0;
    PredictorKind strategy = PredictorKind::TableRank;
    Ranking predicted;
    Rational mae;
    Rational mse;
};

struct StrategySummary {
    PredictorKind strategy = PredictorKind::TableRank;
    /// Earliest round with MAE < baseline_fraction * E[MAE].
    std::optional<std::uint32_t> first_round_below;
    std::uint32_t best_round = 0;
    Rational best_mae;
};

struct ForecastReport {
    std::string season;
    std::uint32_t teams = 0;
    std::uint32_t rounds = 0;
    Rational baseline_mae;  // E[MAE] of a uniformly random guess
    Rational max_mae;
    double baseline_fraction = 0.5;
    std::vector<ForecastRecord> records;  // round-major, rank strategy first
    std::vector<StrategySummary> summaries;
    /// Rounds where the goal-difference forecast has strictly lower MAE.
    std::vector<std::uint32_t> gd_better_rounds;
};

inline constexpr double kDefaultBaselineFraction = 0.5;

ForecastReport evaluate_season(const SeasonDataset& dataset,
                               double baseline_fraction = kDefaultBaselineFraction);

}  // namespace tablecast
