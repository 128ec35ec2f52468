/*
 * tablecast: football-table prediction metrics and round-by-round analysis.
 *
 * C interface to the tablecast shared library. Objects are opaque handles
 * created by *_create / *_load functions and released with the matching
 * *_free. Every fallible call returns a tc_status; on failure a message is
 * available from tc_last_error() on the calling thread until the next call.
 *
 * Strings returned through `char**` are allocated by the library and must be
 * released with tc_string_free().
 */
#ifndef TABLECAST_TABLECAST_H
#define TABLECAST_TABLECAST_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(TABLECAST_BUILDING)
#    define TC_API __declspec(dllexport)
#  else
#    define TC_API __declspec(dllimport)
#  endif
#else
#  define TC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tc_status {
    TC_OK = 0,
    TC_ERR_INVALID_ARGUMENT = 1,
    TC_ERR_DIMENSION = 2,
    TC_ERR_DOMAIN = 3,
    TC_ERR_NOT_PERMUTATION = 4,
    TC_ERR_PARSE = 5,
    TC_ERR_EMPTY_INPUT = 6,
    TC_ERR_CONSISTENCY = 7,
    TC_ERR_DEGENERATE = 8,
    TC_ERR_ORACLE_CAP = 9,
    TC_ERR_IO = 10,
    TC_ERR_INTERNAL = 11
} tc_status;

typedef enum tc_format { TC_FORMAT_CSV = 0, TC_FORMAT_JSON = 1 } tc_format;

typedef enum tc_predictor {
    TC_PREDICTOR_TABLE_RANK = 0,
    TC_PREDICTOR_GOAL_DIFFERENCE = 1
} tc_predictor;

#define TC_DEFAULT_ORACLE_CAP 9u

TC_API const char* tc_version(void);
TC_API const char* tc_status_name(tc_status status);
TC_API const char* tc_last_error(void);
TC_API void tc_string_free(char* str);

/* ---- Ranking metrics ------------------------------------------------------
 * A ranking is an array of n places (1-based) indexed by true final
 * position: pred[i] is the predicted place of the team that finished i+1.
 * `actual` may be NULL for the identity 1..n. */

typedef struct tc_metrics {
    int64_t footrule;  /* sum |pred[i] - actual[i]| */
    int64_t mae_num;   /* MAE = mae_num / mae_den, lowest terms */
    int64_t mae_den;
    int64_t mse_num;   /* MSE = mse_num / mse_den, lowest terms */
    int64_t mse_den;
} tc_metrics;

TC_API tc_status tc_metrics_compute(const int32_t* pred, const int32_t* actual, size_t n,
                                    tc_metrics* out);

/* Renders footrule, MAE and MSE as `metric,exact,decimal` rows (or JSON). */
TC_API tc_status tc_metrics_render(const tc_metrics* metrics, tc_format format, char** out);

/* Writes the order-reversing ranking n, n-1, ..., 1 into out[0..n). */
TC_API tc_status tc_reversal(size_t n, int32_t* out);

/* Scores a table file against another. Either both files are team lists
 * (CSV `position,team` or JSON array of names) or both are rankings (one
 * integer per line or JSON array of integers); `actual_path` may be NULL for
 * a ranking scored against the identity. */
TC_API tc_status tc_metrics_from_files(const char* pred_path, const char* actual_path,
                                       tc_metrics* out);

/* ---- Distribution statistics under uniform random guessing ------------- */

typedef struct tc_stats tc_stats;

typedef enum tc_stats_field {
    TC_STAT_EXPECTED_SCORE = 0,
    TC_STAT_EXPECTED_MAE,
    TC_STAT_VARIANCE_SCORE,
    TC_STAT_VARIANCE_MAE,
    TC_STAT_MAX_SCORE,
    TC_STAT_MAX_MAE,
    TC_STAT_WORST_COUNT,
    TC_STAT_WORST_PROBABILITY,
    TC_STAT_CORRECT_PROBABILITY
} tc_stats_field;

/* Odd n above `oracle_cap` leaves the worst-case fields unavailable. */
TC_API tc_status tc_stats_create(uint32_t n, uint32_t oracle_cap, tc_stats** out);
TC_API void tc_stats_free(tc_stats* stats);

/* Sets *available to 0 (and *out to NULL) for a field that is not known. */
TC_API tc_status tc_stats_exact(const tc_stats* stats, tc_stats_field field, char** out,
                                int* available);
TC_API tc_status tc_stats_decimal(const tc_stats* stats, tc_stats_field field, char** out,
                                  int* available);
TC_API tc_status tc_stats_generalized(const tc_stats* stats, int* out);
TC_API tc_status tc_stats_render(const tc_stats* stats, tc_format format, char** out);

/* ---- Oracles ------------------------------------------------------------ */

typedef struct tc_distribution tc_distribution;

TC_API tc_status tc_distribution_enumerate(uint32_t n, uint32_t oracle_cap,
                                           tc_distribution** out);
TC_API void tc_distribution_free(tc_distribution* dist);
TC_API size_t tc_distribution_size(const tc_distribution* dist);
TC_API tc_status tc_distribution_entry(const tc_distribution* dist, size_t index, int64_t* score,
                                       uint64_t* count);
TC_API tc_status tc_distribution_render(const tc_distribution* dist, tc_format format,
                                        char** out);

typedef struct tc_mc_summary {
    uint32_t n;
    uint64_t samples;
    uint64_t seed;
    double mean;
    double variance;
    double min;
    double max;
} tc_mc_summary;

/* threads = 0 uses the hardware concurrency; results do not depend on it. */
TC_API tc_status tc_monte_carlo_mae(uint32_t n, uint64_t samples, uint64_t seed,
                                    unsigned threads, tc_mc_summary* out);

/* Runs the checks and renders one row per check. *all_passed is 1 iff every
 * check passed. */
TC_API tc_status tc_verify_exact(uint32_t n, uint32_t oracle_cap, tc_format format, char** report,
                                 int* all_passed);
TC_API tc_status tc_verify_monte_carlo(uint32_t n, uint64_t samples, uint64_t seed,
                                       unsigned threads, tc_format format, char** report,
                                       int* all_passed);

/* ---- Season data -------------------------------------------------------- */

typedef struct tc_dataset tc_dataset;

/* Match CSV with header season,round,home_team,away_team,home_goals,away_goals */
TC_API tc_status tc_dataset_load(const char* path, tc_dataset** out);
TC_API tc_status tc_dataset_parse(const char* text, size_t length, tc_dataset** out);
TC_API void tc_dataset_free(tc_dataset* dataset);

TC_API const char* tc_dataset_season(const tc_dataset* dataset);
TC_API size_t tc_dataset_team_count(const tc_dataset* dataset);
TC_API size_t tc_dataset_match_count(const tc_dataset* dataset);
TC_API uint32_t tc_dataset_round_count(const tc_dataset* dataset);

/* round = 0 renders every round 1..R in sequence. */
TC_API tc_status tc_standings_render(const tc_dataset* dataset, uint32_t round, tc_format format,
                                     char** out);

/* Predicted ranking at `round`, indexed by final-table position; `out` must
 * hold tc_dataset_team_count() entries. */
TC_API tc_status tc_predict(const tc_dataset* dataset, uint32_t round, tc_predictor strategy,
                            int32_t* out, size_t capacity);

/* Predicted finishing order as a table file (CSV `position,team` or JSON). */
TC_API tc_status tc_predict_render(const tc_dataset* dataset, uint32_t round,
                                   tc_predictor strategy, tc_format format, char** out);

/* ---- Regression curves -------------------------------------------------- */

typedef struct tc_r2_curve tc_r2_curve;

TC_API tc_status tc_r2_curve_create(const tc_dataset* dataset, tc_predictor kind,
                                    tc_r2_curve** out);
TC_API void tc_r2_curve_free(tc_r2_curve* curve);
TC_API size_t tc_r2_curve_size(const tc_r2_curve* curve);
/* *defined is 0 for a degenerate round (constant predictor). */
TC_API tc_status tc_r2_curve_point(const tc_r2_curve* curve, size_t index, uint32_t* round,
                                   double* r_squared, int* defined);
/* *found is 0 when no round reaches the threshold. */
TC_API tc_status tc_r2_curve_threshold_round(const tc_r2_curve* curve, double threshold,
                                             uint32_t* round, int* found);
/* Renders the given curves as one document (season,kind,round,r_squared). */
TC_API tc_status tc_r2_curves_render(const tc_r2_curve* const* curves, size_t count,
                                     tc_format format, char** out);

/* ---- Forecast evaluation ----------------------------------------------- */

typedef struct tc_report tc_report;

/* baseline_fraction: a strategy's "first round below" is the earliest round
 * with MAE < baseline_fraction * E[MAE]. */
TC_API tc_status tc_evaluate(const tc_dataset* dataset, double baseline_fraction,
                             tc_report** out);
TC_API void tc_report_free(tc_report* report);
TC_API size_t tc_report_record_count(const tc_report* report);
TC_API tc_status tc_report_record(const tc_report* report, size_t index, uint32_t* round,
                                  tc_predictor* strategy, double* mae, double* mse);
TC_API tc_status tc_report_render(const tc_report* report, tc_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* TABLECAST_TABLECAST_H */
