// Command-line front end. Talks to the library only through the C API.

#include "tablecast/tablecast.h"

#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

// Raised for any usage or input problem; maps to exit code 2.
struct UsageError {
    std::string message;
};

struct Options {
    std::string format = "csv";
    std::string output;
    std::optional<std::uint64_t> seed;
    std::uint32_t oracle_cap = TC_DEFAULT_ORACLE_CAP;
    std::optional<double> threshold;

    // stats / verify
    std::uint32_t n = 0;
    std::string exact_range;
    bool monte_carlo = false;
    std::optional<std::uint64_t> samples;
    unsigned threads = 0;

    // mae
    std::string pred_path;
    std::string actual_path;

    // season commands
    std::string matches_path;
    std::uint32_t round = 0;
    std::string strategy = "table_rank";
    double fraction = 0.5;
};

tc_format output_format(const Options& opt) {
    return opt.format == "json" ? TC_FORMAT_JSON : TC_FORMAT_CSV;
}

void check(tc_status status) {
    if (status != TC_OK) {
        throw UsageError{std::string(tc_status_name(status)) + ": " + tc_last_error()};
    }
}

struct StringDeleter {
    void operator()(char* s) const { tc_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct DatasetDeleter {
    void operator()(tc_dataset* d) const { tc_dataset_free(d); }
};
using Dataset = std::unique_ptr<tc_dataset, DatasetDeleter>;

struct CurveDeleter {
    void operator()(tc_r2_curve* c) const { tc_r2_curve_free(c); }
};
using Curve = std::unique_ptr<tc_r2_curve, CurveDeleter>;

struct StatsDeleter {
    void operator()(tc_stats* s) const { tc_stats_free(s); }
};

struct ReportDeleter {
    void operator()(tc_report* r) const { tc_report_free(r); }
};

void emit(const Options& opt, const char* text) {
    if (opt.output.empty() || opt.output == "-") {
        std::fputs(text, stdout);
        return;
    }
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) {
        throw UsageError{"cannot write '" + opt.output + "'"};
    }
    out << text;
}

Dataset load_dataset(const Options& opt) {
    tc_dataset* raw = nullptr;
    check(tc_dataset_load(opt.matches_path.c_str(), &raw));
    return Dataset(raw);
}

tc_predictor parse_strategy(const std::string& name) {
    if (name == "table_rank" || name == "rank") {
        return TC_PREDICTOR_TABLE_RANK;
    }
    if (name == "goal_difference" || name == "gd") {
        return TC_PREDICTOR_GOAL_DIFFERENCE;
    }
    throw UsageError{"unknown strategy '" + name + "' (use rank or gd)"};
}

std::pair<std::uint32_t, std::uint32_t> parse_range(const std::string& text) {
    auto to_uint = [&](std::string_view s) {
        std::uint32_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
            throw UsageError{"bad range '" + text + "' (expected N or LO..HI)"};
        }
        return v;
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const auto v = to_uint(text);
        return {v, v};
    }
    const auto lo = to_uint(std::string_view(text).substr(0, dots));
    const auto hi = to_uint(std::string_view(text).substr(dots + 2));
    if (lo > hi) {
        throw UsageError{"empty range '" + text + "'"};
    }
    return {lo, hi};
}

int cmd_stats(const Options& opt) {
    if (opt.n < 2) {
        throw UsageError{"--n must be at least 2"};
    }
    tc_stats* raw = nullptr;
    check(tc_stats_create(opt.n, opt.oracle_cap, &raw));
    std::unique_ptr<tc_stats, StatsDeleter> stats(raw);
    char* text = nullptr;
    check(tc_stats_render(stats.get(), output_format(opt), &text));
    emit(opt, OwnedString(text).get());
    return kExitOk;
}

int cmd_verify(const Options& opt) {
    if (opt.samples && !opt.seed) {
        throw UsageError{"--samples requires --seed"};
    }
    const std::uint64_t seed = opt.seed.value_or(1);
    const std::uint64_t samples = opt.samples.value_or(100000);

    std::uint32_t lo = opt.n;
    std::uint32_t hi = opt.n;
    bool exact = !opt.exact_range.empty();
    bool mc = opt.monte_carlo;
    if (exact) {
        std::tie(lo, hi) = parse_range(opt.exact_range);
        if (hi > opt.oracle_cap) {
            throw UsageError{"exact range reaches n=" + std::to_string(hi) +
                             ", above the oracle cap " + std::to_string(opt.oracle_cap) +
                             " (raise --oracle-cap to allow it)"};
        }
    } else if (!mc) {
        if (opt.n == 0) {
            throw UsageError{"verify needs --exact RANGE, --mc, or --n N"};
        }
        // Enumerate within the cap, sample beyond it.
        exact = opt.n <= opt.oracle_cap;
        mc = !exact;
    }
    if (lo < 2 || (mc && opt.n < 2)) {
        throw UsageError{"league size must be at least 2"};
    }

    bool all_passed = true;
    std::string document;
    auto append = [&](char* text, int passed) {
        OwnedString owned(text);
        all_passed = all_passed && passed != 0;
        document += owned.get();
    };
    if (exact) {
        for (std::uint32_t n = lo; n <= hi; ++n) {
            char* text = nullptr;
            int passed = 0;
            check(tc_verify_exact(n, opt.oracle_cap, output_format(opt), &text, &passed));
            append(text, passed);
        }
    }
    if (mc) {
        char* text = nullptr;
        int passed = 0;
        check(tc_verify_monte_carlo(opt.n, samples, seed, opt.threads, output_format(opt), &text,
                                    &passed));
        append(text, passed);
    }
    emit(opt, document.c_str());
    return all_passed ? kExitOk : kExitVerifyFailed;
}

int cmd_mae(const Options& opt) {
    tc_metrics metrics{};
    check(tc_metrics_from_files(opt.pred_path.c_str(),
                                opt.actual_path.empty() ? nullptr : opt.actual_path.c_str(),
                                &metrics));
    char* text = nullptr;
    check(tc_metrics_render(&metrics, output_format(opt), &text));
    emit(opt, OwnedString(text).get());
    return kExitOk;
}

int cmd_r2(const Options& opt) {
    const auto dataset = load_dataset(opt);
    std::vector<Curve> curves;
    for (const auto kind : {TC_PREDICTOR_TABLE_RANK, TC_PREDICTOR_GOAL_DIFFERENCE}) {
        tc_r2_curve* raw = nullptr;
        check(tc_r2_curve_create(dataset.get(), kind, &raw));
        curves.emplace_back(raw);
    }
    const tc_r2_curve* handles[] = {curves[0].get(), curves[1].get()};
    char* text = nullptr;
    check(tc_r2_curves_render(handles, 2, output_format(opt), &text));
    emit(opt, OwnedString(text).get());

    if (opt.threshold) {
        const char* names[] = {"table_rank", "goal_difference"};
        for (std::size_t k = 0; k < 2; ++k) {
            std::uint32_t round = 0;
            int found = 0;
            check(tc_r2_curve_threshold_round(handles[k], *opt.threshold, &round, &found));
            std::fprintf(stderr, "threshold %g %s: %s\n", *opt.threshold, names[k],
                         found ? ("round " + std::to_string(round)).c_str() : "not reached");
        }
    }
    return kExitOk;
}

int cmd_predict(const Options& opt) {
    const auto dataset = load_dataset(opt);
    const auto strategy = parse_strategy(opt.strategy);
    const std::uint32_t round = opt.round == 0 ? tc_dataset_round_count(dataset.get()) : opt.round;
    char* text = nullptr;
    check(tc_predict_render(dataset.get(), round, strategy, output_format(opt), &text));
    emit(opt, OwnedString(text).get());
    return kExitOk;
}

int cmd_evaluate(const Options& opt) {
    const auto dataset = load_dataset(opt);
    tc_report* raw = nullptr;
    check(tc_evaluate(dataset.get(), opt.fraction, &raw));
    std::unique_ptr<tc_report, ReportDeleter> report(raw);
    char* text = nullptr;
    check(tc_report_render(report.get(), output_format(opt), &text));
    emit(opt, OwnedString(text).get());
    return kExitOk;
}

int cmd_standings(const Options& opt) {
    const auto dataset = load_dataset(opt);
    char* text = nullptr;
    check(tc_standings_render(dataset.get(), opt.round, output_format(opt), &text));
    emit(opt, OwnedString(text).get());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"Football table prediction metrics and round-by-round analysis"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.set_version_flag("--version", tc_version());

    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--output,-o", opt.output, "Write to PATH instead of standard output");
    app.add_option("--seed", opt.seed, "Random seed (required with --samples)");
    app.add_option("--oracle-cap", opt.oracle_cap, "Largest n the enumeration oracle accepts");
    app.add_option("--threshold", opt.threshold, "R^2 threshold reported by r2")
        ->check(CLI::Range(0.0, 1.0));

    auto* stats = app.add_subcommand("stats", "Exact statistics of a random table guess");
    stats->add_option("--n", opt.n, "League size")->required();

    auto* verify = app.add_subcommand("verify", "Check closed forms against the oracles");
    verify->add_option("--exact", opt.exact_range, "Enumerate n in LO..HI (or a single N)");
    verify->add_flag("--mc", opt.monte_carlo, "Monte Carlo check for --n");
    verify->add_option("--n", opt.n, "League size for Monte Carlo");
    verify->add_option("--samples", opt.samples, "Monte Carlo sample count")
        ->check(CLI::PositiveNumber);
    verify->add_option("--threads", opt.threads, "Worker threads (0 = hardware)");

    auto* mae = app.add_subcommand("mae", "Score a predicted table against the actual one");
    mae->add_option("prediction", opt.pred_path, "Predicted table file")->required();
    mae->add_option("actual", opt.actual_path, "Actual table file (identity if omitted)");

    auto* r2 = app.add_subcommand("r2", "Per-round R^2 curves for rank and goal difference");
    r2->add_option("matches", opt.matches_path, "Match CSV")->required();

    auto* predict = app.add_subcommand("predict", "Predicted final table at a round");
    predict->add_option("matches", opt.matches_path, "Match CSV")->required();
    predict->add_option("--round", opt.round, "Round to predict from (default: last)");
    predict->add_option("--strategy", opt.strategy, "rank or gd");

    auto* evaluate = app.add_subcommand("evaluate", "MAE/MSE of both strategies at every round");
    evaluate->add_option("matches", opt.matches_path, "Match CSV")->required();
    evaluate->add_option("--fraction", opt.fraction,
                         "Report the first round with MAE below this fraction of E[MAE]")
        ->check(CLI::PositiveNumber);

    auto* standings = app.add_subcommand("standings", "Standings table per round");
    standings->add_option("matches", opt.matches_path, "Match CSV")->required();
    standings->add_option("--round", opt.round, "Round (default: every round)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (stats->parsed()) return cmd_stats(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (mae->parsed()) return cmd_mae(opt);
        if (r2->parsed()) return cmd_r2(opt);
        if (predict->parsed()) return cmd_predict(opt);
        if (evaluate->parsed()) return cmd_evaluate(opt);
        if (standings->parsed()) return cmd_standings(opt);
    } catch (const UsageError& e) {
        std::fprintf(stderr, "tablecast: %s\n", e.message.c_str());
        return kExitUsage;
    }
    return kExitUsage;
}
