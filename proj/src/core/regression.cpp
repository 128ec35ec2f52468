#include "regression.hpp"

#include "error.hpp"

#include <cmath>
#include <stdexcept>

namespace tablecast {

namespace {

constexpr double kClampSlack = 1e-12;

double mean_of(std::span<const double> v) {
    double s = 0.0;
    for (const double x : v) {
        s += x;
    }
    return s / static_cast<double>(v.size());
}

}  // namespace

OlsFit simple_ols(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw Error(ErrorCode::Dimension, "x and y lengths differ: " + std::to_string(x.size()) +
                                              " vs " + std::to_string(y.size()));
    }
    if (x.size() < 3) {
        throw Error(ErrorCode::Domain, "regression needs at least 3 points, got " +
                                           std::to_string(x.size()));
    }

    const double x_bar = mean_of(x);
    const double y_bar = mean_of(y);
    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - x_bar;
        const double dy = y[i] - y_bar;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0) {
        throw Error(ErrorCode::DegeneratePredictor, "predictor has zero variance");
    }

    OlsFit fit;
    fit.n_points = x.size();
    fit.beta1 = sxy / sxx;
    fit.beta0 = y_bar - fit.beta1 * x_bar;
    if (syy == 0.0) {
        return fit;
    }

    double ss_res = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double e = (y[i] - y_bar) - fit.beta1 * (x[i] - x_bar);
        ss_res += e * e;
    }
    double r2 = 1.0 - ss_res / syy;
    if (r2 < 0.0 || r2 > 1.0) {
        if (r2 < -kClampSlack || r2 > 1.0 + kClampSlack) {
            throw std::logic_error("R^2 outside [0, 1] beyond rounding: " + std::to_string(r2));
        }
        r2 = r2 < 0.0 ? 0.0 : 1.0;
    }
    fit.r_squared = r2;
    return fit;
}

std::string_view to_string(PredictorKind kind) noexcept {
    return kind == PredictorKind::TableRank ? "table_rank" : "goal_difference";
}

std::optional<PredictorKind> predictor_kind_from_string(std::string_view name) noexcept {
    if (name == "table_rank" || name == "rank") {
        return PredictorKind::TableRank;
    }
    if (name == "goal_difference" || name == "gd") {
        return PredictorKind::GoalDifference;
    }
    return std::nullopt;
}

R2Curve r2_curve(const SeasonDataset& dataset, PredictorKind kind) {
    const auto final_table = final_standings(dataset);
    const auto order = final_table.team_order();
    const std::size_t n = order.size();

    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        y[i] = static_cast<double>(i + 1);
    }

    R2Curve curve;
    curve.season = dataset.season;
    curve.kind = kind;
    curve.points.reserve(dataset.rounds);
    std::vector<double> x(n);
    for (std::uint32_t r = 1; r <= dataset.rounds; ++r) {
        const auto table = standings_at_round(dataset, r);
        if (kind == PredictorKind::TableRank) {
            const auto ranks = rank_vector(table, order);
            for (std::size_t i = 0; i < n; ++i) {
                x[i] = static_cast<double>(ranks[i]);
            }
        } else {
            const auto gd = gd_vector(table, order);
            for (std::size_t i = 0; i < n; ++i) {
                x[i] = static_cast<double>(gd[i]);
            }
        }
        R2Point point{r, std::nullopt};
        if (n >= 3) {
            try {
                point.r_squared = simple_ols(x, y).r_squared;
            } catch (const Error& e) {
                if (e.code() != ErrorCode::DegeneratePredictor) {
                    throw;
                }
            }
        }
        curve.points.push_back(point);
    }
    return curve;
}

std::optional<std::uint32_t> threshold_round(const R2Curve& curve, double threshold) {
    if (!(threshold > 0.0 && threshold <= 1.0)) {
        throw Error(ErrorCode::Domain, "threshold must lie in (0, 1]");
    }
    for (const auto& p : curve.points) {
        if (p.r_squared && *p.r_squared >= threshold) {
            return p.round;
        }
    }
    return std::nullopt;
}

}  // namespace tablecast
