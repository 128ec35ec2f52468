#include "render.hpp"

#include "csv.hpp"

#include <json.hpp>

#include <charconv>
#include <optional>

namespace tablecast::render {

namespace {

using nlohmann::ordered_json;

std::string dump(const ordered_json& doc) {
    return doc.dump(2) + "\n";
}

struct StatField {
    std::string name;
    std::optional<Rational> value;
};

std::vector<StatField> stat_fields(const ScoreStats& s) {
    std::vector<StatField> fields = {
        {"expected_score", s.expected_score},
        {"expected_mae", s.expected_mae},
        {"variance_score", s.variance_score},
        {"variance_mae", s.variance_mae},
        {"max_score", Rational(s.max_score)},
        {"max_mae", s.max_mae},
        {"worst_count", s.worst_count ? std::optional<Rational>(Rational(*s.worst_count))
                                      : std::nullopt},
        {"worst_probability", s.worst_probability},
        {"correct_probability", s.correct_probability},
    };
    return fields;
}

}  // namespace

std::string real(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

std::string metrics(std::int64_t footrule, const Rational& mae, const Rational& mse, Format format) {
    const std::pair<const char*, Rational> rows[] = {
        {"footrule", Rational(footrule)}, {"mae", mae}, {"mse", mse}};
    if (format == Format::Json) {
        ordered_json doc;
        for (const auto& [name, value] : rows) {
            doc[name] = {{"exact", to_fraction_string(value)},
                         {"decimal", to_decimal_string(value)}};
        }
        return dump(doc);
    }
    std::string out = "metric,exact,decimal\n";
    for (const auto& [name, value] : rows) {
        out += std::string(name) + "," + to_fraction_string(value) + "," +
               to_decimal_string(value) + "\n";
    }
    return out;
}

std::string score_stats(const ScoreStats& stats, Format format) {
    const auto fields = stat_fields(stats);
    if (format == Format::Json) {
        ordered_json doc;
        doc["n"] = stats.n;
        doc["generalized"] = stats.generalized;
        for (const auto& f : fields) {
            if (f.value) {
                doc[f.name] = {{"exact", to_fraction_string(*f.value)},
                               {"decimal", to_decimal_string(*f.value)}};
            } else {
                doc[f.name] = nullptr;
            }
        }
        return dump(doc);
    }
    std::string out = "field,exact,decimal\n";
    out += "n," + std::to_string(stats.n) + "," + std::to_string(stats.n) + "\n";
    out += std::string("generalized,") + (stats.generalized ? "true,true" : "false,false") + "\n";
    for (const auto& f : fields) {
        out += f.name + ",";
        if (f.value) {
            out += to_fraction_string(*f.value) + "," + to_decimal_string(*f.value);
        } else {
            out += ",";
        }
        out += "\n";
    }
    return out;
}

std::string distribution(const ScoreDistribution& dist, Format format) {
    if (format == Format::Json) {
        ordered_json doc;
        doc["n"] = dist.n;
        doc["counts"] = ordered_json::array();
        for (const auto& [score, count] : dist.counts) {
            doc["counts"].push_back({{"score", score}, {"count", count}});
        }
        return dump(doc);
    }
    std::string out = "n,score,count\n";
    for (const auto& [score, count] : dist.counts) {
        out += std::to_string(dist.n) + "," + std::to_string(score) + "," +
               std::to_string(count) + "\n";
    }
    return out;
}

std::string checks(std::span<const Check> checks, Format format) {
    if (format == Format::Json) {
        ordered_json doc = ordered_json::array();
        for (const auto& c : checks) {
            doc.push_back({{"check", c.name},
                           {"expected", c.expected},
                           {"observed", c.observed},
                           {"result", c.pass ? "PASS" : "FAIL"}});
        }
        return dump(doc);
    }
    std::string out = "check,expected,observed,result\n";
    for (const auto& c : checks) {
        out += csv::escape(c.name) + "," + csv::escape(c.expected) + "," +
               csv::escape(c.observed) + "," + (c.pass ? "PASS" : "FAIL") + "\n";
    }
    return out;
}

std::string monte_carlo(const MonteCarloSummary& s, Format format) {
    if (format == Format::Json) {
        ordered_json doc;
        doc["n"] = s.n;
        doc["samples"] = s.samples;
        doc["seed"] = s.seed;
        doc["mean"] = s.mean;
        doc["variance"] = s.variance;
        doc["min"] = s.min;
        doc["max"] = s.max;
        return dump(doc);
    }
    return "n,samples,seed,mean,variance,min,max\n" + std::to_string(s.n) + "," +
           std::to_string(s.samples) + "," + std::to_string(s.seed) + "," + real(s.mean) + "," +
           real(s.variance) + "," + real(s.min) + "," + real(s.max) + "\n";
}

std::string standings(std::span<const StandingsTable> tables, Format format) {
    if (format == Format::Json) {
        ordered_json doc = ordered_json::array();
        for (const auto& t : tables) {
            for (const auto& r : t.rows) {
                doc.push_back({{"round", t.round},
                               {"rank", r.rank},
                               {"team", r.team},
                               {"played", r.played},
                               {"won", r.won},
                               {"drawn", r.drawn},
                               {"lost", r.lost},
                               {"gf", r.goals_for},
                               {"ga", r.goals_against},
                               {"gd", r.goal_difference},
                               {"points", r.points}});
            }
        }
        return dump(doc);
    }
    std::string out = "round,rank,team,played,won,drawn,lost,gf,ga,gd,points\n";
    for (const auto& t : tables) {
        for (const auto& r : t.rows) {
            out += std::to_string(t.round) + "," + std::to_string(r.rank) + "," +
                   csv::escape(r.team) + "," + std::to_string(r.played) + "," +
                   std::to_string(r.won) + "," + std::to_string(r.drawn) + "," +
                   std::to_string(r.lost) + "," + std::to_string(r.goals_for) + "," +
                   std::to_string(r.goals_against) + "," + std::to_string(r.goal_difference) +
                   "," + std::to_string(r.points) + "\n";
        }
    }
    return out;
}

std::string r2_curves(std::span<const R2Curve> curves, Format format) {
    if (format == Format::Json) {
        ordered_json doc = ordered_json::array();
        for (const auto& c : curves) {
            for (const auto& p : c.points) {
                ordered_json row = {{"season", c.season},
                                    {"kind", std::string(to_string(c.kind))},
                                    {"round", p.round}};
                row["r_squared"] = p.r_squared ? ordered_json(*p.r_squared) : ordered_json(nullptr);
                doc.push_back(std::move(row));
            }
        }
        return dump(doc);
    }
    std::string out = "season,kind,round,r_squared\n";
    for (const auto& c : curves) {
        for (const auto& p : c.points) {
            out += csv::escape(c.season) + "," + std::string(to_string(c.kind)) + "," +
                   std::to_string(p.round) + "," + (p.r_squared ? real(*p.r_squared) : "") + "\n";
        }
    }
    return out;
}

std::string team_order(std::span<const std::string> teams, Format format) {
    if (format == Format::Json) {
        return ordered_json(std::vector<std::string>(teams.begin(), teams.end())).dump(2) + "\n";
    }
    std::string out = "position,team\n";
    for (std::size_t k = 0; k < teams.size(); ++k) {
        out += std::to_string(k + 1) + "," + csv::escape(teams[k]) + "\n";
    }
    return out;
}

std::string forecast_report(const ForecastReport& report, Format format) {
    if (format == Format::Json) {
        ordered_json doc;
        doc["season"] = report.season;
        doc["teams"] = report.teams;
        doc["rounds"] = report.rounds;
        doc["baseline"] = {
            {"expected_mae", {{"exact", to_fraction_string(report.baseline_mae)},
                              {"decimal", to_decimal_string(report.baseline_mae)}}},
            {"max_mae", {{"exact", to_fraction_string(report.max_mae)},
                         {"decimal", to_decimal_string(report.max_mae)}}},
            {"fraction", report.baseline_fraction},
        };
        doc["strategies"] = ordered_json::array();
        for (const auto& s : report.summaries) {
            ordered_json entry = {{"strategy", std::string(to_string(s.strategy))}};
            entry["first_round_below"] = s.first_round_below ? ordered_json(*s.first_round_below)
                                                             : ordered_json(nullptr);
            entry["best_round"] = s.best_round;
            entry["best_mae"] = to_decimal_string(s.best_mae);
            doc["strategies"].push_back(std::move(entry));
        }
        doc["gd_better_rounds"] = report.gd_better_rounds;
        doc["records"] = ordered_json::array();
        for (const auto& r : report.records) {
            doc["records"].push_back({{"season", report.season},
                                      {"round", r.round},
                                      {"strategy", std::string(to_string(r.strategy))},
                                      {"mae", to_decimal_string(r.mae)},
                                      {"mse", to_decimal_string(r.mse)}});
        }
        return dump(doc);
    }
    std::string out = "season,round,strategy,mae,mse\n";
    for (const auto& r : report.records) {
        out += csv::escape(report.season) + "," + std::to_string(r.round) + "," +
               std::string(to_string(r.strategy)) + "," + to_decimal_string(r.mae) + "," +
               to_decimal_string(r.mse) + "\n";
    }
    return out;
}

}  // namespace tablecast::render
