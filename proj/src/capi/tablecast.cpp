#include "tablecast/tablecast.h"

#include "error.hpp"
#include "league.hpp"
#include "permstats.hpp"
#include "predictor.hpp"
#include "regression.hpp"
#include "render.hpp"
#include "table_io.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <new>
#include <optional>
#include <string>
#include <vector>

using namespace tablecast;

struct tc_stats {
    ScoreStats value;
};

struct tc_distribution {
    ScoreDistribution value;
};

struct tc_dataset {
    SeasonDataset value;
};

struct tc_r2_curve {
    R2Curve value;
};

struct tc_report {
    ForecastReport value;
};

namespace {

thread_local std::string g_last_error;

tc_status map_code(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidArgument: return TC_ERR_INVALID_ARGUMENT;
    case ErrorCode::Dimension: return TC_ERR_DIMENSION;
    case ErrorCode::Domain: return TC_ERR_DOMAIN;
    case ErrorCode::NotPermutation: return TC_ERR_NOT_PERMUTATION;
    case ErrorCode::Parse: return TC_ERR_PARSE;
    case ErrorCode::EmptyInput: return TC_ERR_EMPTY_INPUT;
    case ErrorCode::Consistency: return TC_ERR_CONSISTENCY;
    case ErrorCode::DegeneratePredictor: return TC_ERR_DEGENERATE;
    case ErrorCode::OracleCap: return TC_ERR_ORACLE_CAP;
    case ErrorCode::Io: return TC_ERR_IO;
    }
    return TC_ERR_INTERNAL;
}

tc_status fail(tc_status status, std::string message) {
    g_last_error = std::move(message);
    return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
tc_status guarded(F&& body) {
    g_last_error.clear();
    try {
        body();
        return TC_OK;
    } catch (const Error& e) {
        return fail(map_code(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(TC_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(TC_ERR_INTERNAL, e.what());
    }
}

void require(bool condition, const char* what) {
    if (!condition) {
        throw Error(ErrorCode::InvalidArgument, what);
    }
}

char* copy_string(const std::string& s) {
    auto* buf = static_cast<char*>(std::malloc(s.size() + 1));
    if (buf == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(buf, s.c_str(), s.size() + 1);
    return buf;
}

render::Format to_format(tc_format format) {
    require(format == TC_FORMAT_CSV || format == TC_FORMAT_JSON, "unknown output format");
    return format == TC_FORMAT_JSON ? render::Format::Json : render::Format::Csv;
}

PredictorKind to_kind(tc_predictor kind) {
    require(kind == TC_PREDICTOR_TABLE_RANK || kind == TC_PREDICTOR_GOAL_DIFFERENCE,
            "unknown predictor kind");
    return kind == TC_PREDICTOR_TABLE_RANK ? PredictorKind::TableRank
                                           : PredictorKind::GoalDifference;
}

std::int64_t to_i64(const BigInt& value) {
    if (value > BigInt(std::numeric_limits<std::int64_t>::max()) ||
        value < BigInt(std::numeric_limits<std::int64_t>::min())) {
        throw Error(ErrorCode::Domain, "value does not fit in 64 bits");
    }
    return value.convert_to<std::int64_t>();
}

void fill_metrics(const Ranking& pred, const Ranking& actual, tc_metrics* out) {
    const Rational m = mae(pred, actual);
    const Rational s = mse(pred, actual);
    out->footrule = footrule_score(pred, actual);
    out->mae_num = to_i64(boost::multiprecision::numerator(m));
    out->mae_den = to_i64(boost::multiprecision::denominator(m));
    out->mse_num = to_i64(boost::multiprecision::numerator(s));
    out->mse_den = to_i64(boost::multiprecision::denominator(s));
}

std::optional<Rational> stats_field(const ScoreStats& s, tc_stats_field field) {
    switch (field) {
    case TC_STAT_EXPECTED_SCORE: return s.expected_score;
    case TC_STAT_EXPECTED_MAE: return s.expected_mae;
    case TC_STAT_VARIANCE_SCORE: return s.variance_score;
    case TC_STAT_VARIANCE_MAE: return s.variance_mae;
    case TC_STAT_MAX_SCORE: return Rational(s.max_score);
    case TC_STAT_MAX_MAE: return s.max_mae;
    case TC_STAT_WORST_COUNT:
        return s.worst_count ? std::optional<Rational>(Rational(*s.worst_count)) : std::nullopt;
    case TC_STAT_WORST_PROBABILITY: return s.worst_probability;
    case TC_STAT_CORRECT_PROBABILITY: return s.correct_probability;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown stats field");
}

template <typename Render>
tc_status render_stats_field(const tc_stats* stats, tc_stats_field field, char** out,
                             int* available, Render&& to_text) {
    return guarded([&] {
        require(stats != nullptr && out != nullptr && available != nullptr, "null argument");
        *out = nullptr;
        const auto value = stats_field(stats->value, field);
        *available = value ? 1 : 0;
        if (value) {
            *out = copy_string(to_text(*value));
        }
    });
}

}  // namespace

extern "C" {

const char* tc_version(void) {
    return "1.0.0";
}

const char* tc_status_name(tc_status status) {
    switch (status) {
    case TC_OK: return "ok";
    case TC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case TC_ERR_DIMENSION: return "dimension error";
    case TC_ERR_DOMAIN: return "domain error";
    case TC_ERR_NOT_PERMUTATION: return "not a permutation";
    case TC_ERR_PARSE: return "parse error";
    case TC_ERR_EMPTY_INPUT: return "empty input";
    case TC_ERR_CONSISTENCY: return "consistency error";
    case TC_ERR_DEGENERATE: return "degenerate predictor";
    case TC_ERR_ORACLE_CAP: return "oracle cap exceeded";
    case TC_ERR_IO: return "i/o error";
    case TC_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* tc_last_error(void) {
    return g_last_error.c_str();
}

void tc_string_free(char* str) {
    std::free(str);
}

tc_status tc_metrics_compute(const int32_t* pred, const int32_t* actual, size_t n,
                             tc_metrics* out) {
    return guarded([&] {
        require(pred != nullptr && out != nullptr, "null argument");
        const auto p = Ranking::from_places(std::vector<std::int32_t>(pred, pred + n));
        const auto a = actual != nullptr
                           ? Ranking::from_places(std::vector<std::int32_t>(actual, actual + n))
                           : Ranking::identity(n);
        fill_metrics(p, a, out);
    });
}

tc_status tc_metrics_render(const tc_metrics* metrics, tc_format format, char** out) {
    return guarded([&] {
        require(metrics != nullptr && out != nullptr, "null argument");
        require(metrics->mae_den > 0 && metrics->mse_den > 0, "metrics denominators must be positive");
        *out = copy_string(render::metrics(metrics->footrule,
                                           Rational(metrics->mae_num, metrics->mae_den),
                                           Rational(metrics->mse_num, metrics->mse_den),
                                           to_format(format)));
    });
}

tc_status tc_reversal(size_t n, int32_t* out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        const auto r = Ranking::reversal(n);
        std::copy(r.places().begin(), r.places().end(), out);
    });
}

tc_status tc_metrics_from_files(const char* pred_path, const char* actual_path, tc_metrics* out) {
    return guarded([&] {
        require(pred_path != nullptr && out != nullptr, "null argument");
        const auto pred = load_table(pred_path);
        std::optional<TableFile> actual;
        if (actual_path != nullptr) {
            actual = load_table(actual_path);
        }
        const auto pair = align_tables(pred, actual);
        fill_metrics(pair.predicted, pair.actual, out);
    });
}

tc_status tc_stats_create(uint32_t n, uint32_t oracle_cap, tc_stats** out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = nullptr;
        *out = new tc_stats{score_stats(n, oracle_cap)};
    });
}

void tc_stats_free(tc_stats* stats) {
    delete stats;
}

tc_status tc_stats_exact(const tc_stats* stats, tc_stats_field field, char** out, int* available) {
    return render_stats_field(stats, field, out, available,
                              [](const Rational& r) { return to_fraction_string(r); });
}

tc_status tc_stats_decimal(const tc_stats* stats, tc_stats_field field, char** out,
                           int* available) {
    return render_stats_field(stats, field, out, available,
                              [](const Rational& r) { return to_decimal_string(r); });
}

tc_status tc_stats_generalized(const tc_stats* stats, int* out) {
    return guarded([&] {
        require(stats != nullptr && out != nullptr, "null argument");
        *out = stats->value.generalized ? 1 : 0;
    });
}

tc_status tc_stats_render(const tc_stats* stats, tc_format format, char** out) {
    return guarded([&] {
        require(stats != nullptr && out != nullptr, "null argument");
        *out = copy_string(render::score_stats(stats->value, to_format(format)));
    });
}

tc_status tc_distribution_enumerate(uint32_t n, uint32_t oracle_cap, tc_distribution** out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = nullptr;
        *out = new tc_distribution{brute_force_distribution(n, oracle_cap)};
    });
}

void tc_distribution_free(tc_distribution* dist) {
    delete dist;
}

size_t tc_distribution_size(const tc_distribution* dist) {
    return dist == nullptr ? 0 : dist->value.counts.size();
}

tc_status tc_distribution_entry(const tc_distribution* dist, size_t index, int64_t* score,
                                uint64_t* count) {
    return guarded([&] {
        require(dist != nullptr && score != nullptr && count != nullptr, "null argument");
        if (index >= dist->value.counts.size()) {
            throw Error(ErrorCode::Domain, "distribution index out of range");
        }
        auto it = dist->value.counts.begin();
        std::advance(it, static_cast<std::ptrdiff_t>(index));
        *score = it->first;
        *count = it->second;
    });
}

tc_status tc_distribution_render(const tc_distribution* dist, tc_format format, char** out) {
    return guarded([&] {
        require(dist != nullptr && out != nullptr, "null argument");
        *out = copy_string(render::distribution(dist->value, to_format(format)));
    });
}

tc_status tc_monte_carlo_mae(uint32_t n, uint64_t samples, uint64_t seed, unsigned threads,
                             tc_mc_summary* out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        const auto s = monte_carlo_mae(n, samples, seed, threads);
        *out = tc_mc_summary{s.n, s.samples, s.seed, s.mean, s.variance, s.min, s.max};
    });
}

tc_status tc_verify_exact(uint32_t n, uint32_t oracle_cap, tc_format format, char** report,
                          int* all_passed) {
    return guarded([&] {
        require(report != nullptr && all_passed != nullptr, "null argument");
        const auto fmt = to_format(format);
        const auto checks = verify_exact(n, oracle_cap);
        *all_passed = std::all_of(checks.begin(), checks.end(), [](auto& c) { return c.pass; });
        *report = copy_string(render::checks(checks, fmt));
    });
}

tc_status tc_verify_monte_carlo(uint32_t n, uint64_t samples, uint64_t seed, unsigned threads,
                                tc_format format, char** report, int* all_passed) {
    return guarded([&] {
        require(report != nullptr && all_passed != nullptr, "null argument");
        const auto fmt = to_format(format);
        const auto checks = verify_monte_carlo(n, samples, seed, threads);
        *all_passed = std::all_of(checks.begin(), checks.end(), [](auto& c) { return c.pass; });
        *report = copy_string(render::checks(checks, fmt));
    });
}

tc_status tc_dataset_load(const char* path, tc_dataset** out) {
    return guarded([&] {
        require(path != nullptr && out != nullptr, "null argument");
        *out = nullptr;
        *out = new tc_dataset{load_matches(path)};
    });
}

tc_status tc_dataset_parse(const char* text, size_t length, tc_dataset** out) {
    return guarded([&] {
        require((text != nullptr || length == 0) && out != nullptr, "null argument");
        *out = nullptr;
        *out = new tc_dataset{parse_matches(std::string_view(text ? text : "", length))};
    });
}

void tc_dataset_free(tc_dataset* dataset) {
    delete dataset;
}

const char* tc_dataset_season(const tc_dataset* dataset) {
    return dataset == nullptr ? "" : dataset->value.season.c_str();
}

size_t tc_dataset_team_count(const tc_dataset* dataset) {
    return dataset == nullptr ? 0 : dataset->value.teams.size();
}

size_t tc_dataset_match_count(const tc_dataset* dataset) {
    return dataset == nullptr ? 0 : dataset->value.matches.size();
}

uint32_t tc_dataset_round_count(const tc_dataset* dataset) {
    return dataset == nullptr ? 0 : dataset->value.rounds;
}

tc_status tc_standings_render(const tc_dataset* dataset, uint32_t round, tc_format format,
                              char** out) {
    return guarded([&] {
        require(dataset != nullptr && out != nullptr, "null argument");
        const auto fmt = to_format(format);
        std::vector<StandingsTable> tables;
        if (round == 0) {
            for (std::uint32_t r = 1; r <= dataset->value.rounds; ++r) {
                tables.push_back(standings_at_round(dataset->value, r));
            }
        } else {
            tables.push_back(standings_at_round(dataset->value, round));
        }
        *out = copy_string(render::standings(tables, fmt));
    });
}

tc_status tc_predict(const tc_dataset* dataset, uint32_t round, tc_predictor strategy,
                     int32_t* out, size_t capacity) {
    return guarded([&] {
        require(dataset != nullptr && out != nullptr, "null argument");
        const auto kind = to_kind(strategy);
        if (capacity < dataset->value.teams.size()) {
            throw Error(ErrorCode::Dimension, "output buffer holds " + std::to_string(capacity) +
                                                  " entries, need " +
                                                  std::to_string(dataset->value.teams.size()));
        }
        const auto final_order = final_standings(dataset->value).team_order();
        const auto table = standings_at_round(dataset->value, round);
        const auto ranking = order_to_ranking(predicted_order(table, kind), final_order);
        std::copy(ranking.places().begin(), ranking.places().end(), out);
    });
}

tc_status tc_predict_render(const tc_dataset* dataset, uint32_t round, tc_predictor strategy,
                            tc_format format, char** out) {
    return guarded([&] {
        require(dataset != nullptr && out != nullptr, "null argument");
        const auto kind = to_kind(strategy);
        const auto fmt = to_format(format);
        const auto table = standings_at_round(dataset->value, round);
        *out = copy_string(render::team_order(predicted_order(table, kind), fmt));
    });
}

tc_status tc_r2_curve_create(const tc_dataset* dataset, tc_predictor kind, tc_r2_curve** out) {
    return guarded([&] {
        require(dataset != nullptr && out != nullptr, "null argument");
        *out = nullptr;
        *out = new tc_r2_curve{r2_curve(dataset->value, to_kind(kind))};
    });
}

void tc_r2_curve_free(tc_r2_curve* curve) {
    delete curve;
}

size_t tc_r2_curve_size(const tc_r2_curve* curve) {
    return curve == nullptr ? 0 : curve->value.points.size();
}

tc_status tc_r2_curve_point(const tc_r2_curve* curve, size_t index, uint32_t* round,
                            double* r_squared, int* defined) {
    return guarded([&] {
        require(curve != nullptr && round != nullptr && r_squared != nullptr && defined != nullptr,
                "null argument");
        if (index >= curve->value.points.size()) {
            throw Error(ErrorCode::Domain, "curve index out of range");
        }
        const auto& p = curve->value.points[index];
        *round = p.round;
        *defined = p.r_squared ? 1 : 0;
        *r_squared = p.r_squared.value_or(0.0);
    });
}

tc_status tc_r2_curve_threshold_round(const tc_r2_curve* curve, double threshold, uint32_t* round,
                                      int* found) {
    return guarded([&] {
        require(curve != nullptr && round != nullptr && found != nullptr, "null argument");
        const auto r = threshold_round(curve->value, threshold);
        *found = r ? 1 : 0;
        *round = r.value_or(0);
    });
}

tc_status tc_r2_curves_render(const tc_r2_curve* const* curves, size_t count, tc_format format,
                              char** out) {
    return guarded([&] {
        require((curves != nullptr || count == 0) && out != nullptr, "null argument");
        const auto fmt = to_format(format);
        std::vector<R2Curve> list;
        for (size_t k = 0; k < count; ++k) {
            require(curves[k] != nullptr, "null curve");
            list.push_back(curves[k]->value);
        }
        *out = copy_string(render::r2_curves(list, fmt));
    });
}

tc_status tc_evaluate(const tc_dataset* dataset, double baseline_fraction, tc_report** out) {
    return guarded([&] {
        require(dataset != nullptr && out != nullptr, "null argument");
        *out = nullptr;
        *out = new tc_report{evaluate_season(dataset->value, baseline_fraction)};
    });
}

void tc_report_free(tc_report* report) {
    delete report;
}

size_t tc_report_record_count(const tc_report* report) {
    return report == nullptr ? 0 : report->value.records.size();
}

tc_status tc_report_record(const tc_report* report, size_t index, uint32_t* round,
                           tc_predictor* strategy, double* mae_out, double* mse_out) {
    return guarded([&] {
        require(report != nullptr && round != nullptr && strategy != nullptr &&
                    mae_out != nullptr && mse_out != nullptr,
                "null argument");
        if (index >= report->value.records.size()) {
            throw Error(ErrorCode::Domain, "record index out of range");
        }
        const auto& r = report->value.records[index];
        *round = r.round;
        *strategy = r.strategy == PredictorKind::TableRank ? TC_PREDICTOR_TABLE_RANK
                                                           : TC_PREDICTOR_GOAL_DIFFERENCE;
        *mae_out = to_double(r.mae);
        *mse_out = to_double(r.mse);
    });
}

tc_status tc_report_render(const tc_report* report, tc_format format, char** out) {
    return guarded([&] {
        require(report != nullptr && out != nullptr, "null argument");
        *out = copy_string(render::forecast_report(report->value, to_format(format)));
    });
}

}  // extern "C"
