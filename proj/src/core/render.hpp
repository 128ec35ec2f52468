#pragma once

#include "league.hpp"
#include "permstats.hpp"
#include "predictor.hpp"
#include "regression.hpp"

#include <span>
#include <string>
#include <vector>

namespace tablecast::render {

enum class Format { Csv, Json };

// Each emitter returns the full document including a trailing newline. CSV
// and JSON variants carry the same fields.

/// `metric,exact,decimal` rows for footrule, mae and mse.
std::string metrics(std::int64_t footrule, const Rational& mae, const Rational& mse, Format format);

std::string score_stats(const ScoreStats& stats, Format format);
std::string distribution(const ScoreDistribution& dist, Format format);
std::string checks(std::span<const Check> checks, Format format);
std::string monte_carlo(const MonteCarloSummary& summary, Format format);

/// `round,rank,team,played,won,drawn,lost,gf,ga,gd,points`
std::string standings(std::span<const StandingsTable> tables, Format format);

/// `season,kind,round,r_squared`; undefined values are empty (CSV) or null.
std::string r2_curves(std::span<const R2Curve> curves, Format format);

/// CSV `position,team` or a JSON array of names.
std::string team_order(std::span<const std::string> teams, Format format);

/// CSV `season,round,strategy,mae,mse`. The JSON form adds the baseline and
/// per-strategy summaries around the same records.
std::string forecast_report(const ForecastReport& report, Format format);

/// Shortest decimal text that reads back to the same double.
std::string real(double value);

}  // namespace tablecast::render
