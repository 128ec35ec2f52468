#include "predictor.hpp"

#include "error.hpp"

#include <algorithm>
#include <unordered_map>

namespace tablecast {

std::vector<std::string> predicted_order(const StandingsTable& table, PredictorKind strategy) {
    if (strategy == PredictorKind::TableRank) {
        return table.team_order();
    }
    std::vector<const StandingsRow*> rows;
    rows.reserve(table.rows.size());
    for (const auto& row : table.rows) {
        rows.push_back(&row);
    }
    std::sort(rows.begin(), rows.end(), [](const StandingsRow* a, const StandingsRow* b) {
        if (a->goal_difference != b->goal_difference) {
            return a->goal_difference > b->goal_difference;
        }
        if (a->points != b->points) {
            return a->points > b->points;
        }
        if (a->goals_for != b->goals_for) {
            return a->goals_for > b->goals_for;
        }
        return a->team < b->team;
    });
    std::vector<std::string> order;
    order.reserve(rows.size());
    for (const auto* row : rows) {
        order.push_back(row->team);
    }
    return order;
}

Ranking order_to_ranking(std::span<const std::string> predicted,
                         std::span<const std::string> final_order) {
    if (predicted.size() != final_order.size()) {
        throw Error(ErrorCode::Dimension, "predicted order has " + std::to_string(predicted.size()) +
                                              " teams, final order has " +
                                              std::to_string(final_order.size()));
    }
    std::unordered_map<std::string, std::int32_t> place;
    for (std::size_t k = 0; k < predicted.size(); ++k) {
        if (!place.emplace(predicted[k], static_cast<std::int32_t>(k + 1)).second) {
            throw Error(ErrorCode::Consistency, "team '" + predicted[k] + "' listed twice");
        }
    }
    std::vector<std::int32_t> places;
    places.reserve(final_order.size());
    for (const auto& team : final_order) {
        const auto it = place.find(team);
        if (it == place.end()) {
            throw Error(ErrorCode::Consistency, "team '" + team + "' missing from prediction");
        }
        places.push_back(it->second);
    }
    return Ranking::from_places(std::move(places));
}

Ranking predict_by_rank(const StandingsTable& table, std::span<const std::string> final_order) {
    return order_to_ranking(predicted_order(table, PredictorKind::TableRank), final_order);
}

Ranking predict_by_gd(const StandingsTable& table, std::span<const std::string> final_order) {
    return order_to_ranking(predicted_order(table, PredictorKind::GoalDifference), final_order);
}

ForecastReport evaluate_season(const SeasonDataset& dataset, double baseline_fraction) {
    if (!(baseline_fraction > 0.0)) {
        throw Error(ErrorCode::Domain, "baseline fraction must be positive");
    }
    const auto final_table = final_standings(dataset);
    const auto final_order = final_table.team_order();
    const auto n = static_cast<std::uint32_t>(final_order.size());
    const auto stats = score_stats(n, 0);

    ForecastReport report;
    report.season = dataset.season;
    report.teams = n;
    report.rounds = dataset.rounds;
    report.baseline_mae = stats.expected_mae;
    report.max_mae = stats.max_mae;
    report.baseline_fraction = baseline_fraction;

    const Rational cutoff = Rational(baseline_fraction) * stats.expected_mae;
    const PredictorKind strategies[] = {PredictorKind::TableRank, PredictorKind::GoalDifference};
    for (const auto s : strategies) {
        report.summaries.push_back(StrategySummary{s, std::nullopt, 0, stats.max_mae});
    }

    for (std::uint32_t r = 1; r <= dataset.rounds; ++r) {
        const auto table = standings_at_round(dataset, r);
        Rational round_mae[2];
        for (std::size_t k = 0; k < 2; ++k) {
            auto predicted = order_to_ranking(predicted_order(table, strategies[k]), final_order);
            const Rational m = mae(predicted);
            const Rational sq = mse(predicted);
            round_mae[k] = m;

            auto& summary = report.summaries[k];
            if (!summary.first_round_below && m < cutoff) {
                summary.first_round_below = r;
            }
            if (summary.best_round == 0 || m < summary.best_mae) {
                summary.best_round = r;
                summary.best_mae = m;
            }
            report.records.push_back(ForecastRecord{r, strategies[k], std::move(predicted), m, sq});
        }
        if (round_mae[1] < round_mae[0]) {
            report.gd_better_rounds.push_back(r);
        }
    }
    return report;
}

}  // namespace tablecast
