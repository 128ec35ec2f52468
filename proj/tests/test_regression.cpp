#include "doctest.h"

#include "error.hpp"
#include "random.hpp"
#include "regression.hpp"
#include "synthetic.hpp"

#include <cmath>

using namespace tablecast;

namespace {

const std::string kDataDir = TABLECAST_DATA_DIR;

double pearson_squared(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    const double r = sxy / std::sqrt(sxx * syy);
    return r * r;
}

}  // namespace

TEST_SUITE("simple_ols") {
    TEST_CASE("perfect positive fit") {
        std::vector<double> x(10);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = static_cast<double>(i + 1);
        const auto fit = simple_ols(x, x);
        CHECK(fit.beta0 == 0.0);
        CHECK(fit.beta1 == 1.0);
        CHECK(*fit.r_squared == 1.0);
        CHECK(fit.n_points == 10);
    }

    TEST_CASE("hand-computed quarter") {
        const std::vector<double> x = {1, 2, 3};
        const std::vector<double> y = {1, 3, 2};
        const auto fit = simple_ols(x, y);
        CHECK(*fit.r_squared == doctest::Approx(0.25).epsilon(1e-12));
        CHECK(fit.beta1 == doctest::Approx(0.5));
        CHECK(fit.beta0 == doctest::Approx(1.0));
    }

    TEST_CASE("perfect negative fit") {
        const std::vector<double> x = {5, 4, 3, 2, 1};
        const std::vector<double> y = {1, 2, 3, 4, 5};
        const auto fit = simple_ols(x, y);
        CHECK(fit.beta1 == -1.0);
        CHECK(*fit.r_squared == 1.0);
    }

    TEST_CASE("degenerate inputs") {
        const std::vector<double> flat = {2, 2, 2, 2};
        const std::vector<double> y = {1, 2, 3, 4};
        try {
            simple_ols(flat, y);
            FAIL("expected degenerate predictor");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::DegeneratePredictor);
        }
        const auto fit = simple_ols(y, flat);
        CHECK_FALSE(fit.r_squared.has_value());
        CHECK(fit.beta1 == 0.0);

        const std::vector<double> two = {1, 2};
        CHECK_THROWS_AS(simple_ols(two, two), Error);
        const std::vector<double> three = {1, 2, 3};
        CHECK_THROWS_AS(simple_ols(three, y), Error);
    }

    TEST_CASE("identities on random inputs") {
        Rng rng(2024);
        for (int trial = 0; trial < 200; ++trial) {
            const std::size_t n = 3 + rng.below(40);
            std::vector<double> x(n), y(n);
            for (std::size_t i = 0; i < n; ++i) {
                x[i] = static_cast<double>(rng.below(1000)) / 10.0 - 50.0;
                y[i] = 0.3 * x[i] + static_cast<double>(rng.below(1000)) / 37.0;
            }
            const auto fit = simple_ols(x, y);
            REQUIRE(fit.r_squared.has_value());
            CHECK(*fit.r_squared >= 0.0);
            CHECK(*fit.r_squared <= 1.0);
            CHECK(std::abs(*fit.r_squared - pearson_squared(x, y)) <= 1e-12);
            CHECK(std::abs(*simple_ols(y, x).r_squared - *fit.r_squared) <= 1e-12);
            std::vector<double> z(n);
            for (std::size_t i = 0; i < n; ++i) z[i] = -3.0 * x[i] + 11.0;
            CHECK(std::abs(*simple_ols(z, y).r_squared - *fit.r_squared) <= 1e-12);
        }
    }
}

TEST_SUITE("r2_curve") {
    TEST_CASE("final round of the rank curve is exactly one") {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            const auto ds = testing::synthetic_season(14, seed);
            const auto curve = r2_curve(ds, PredictorKind::TableRank);
            REQUIRE(curve.points.size() == ds.rounds);
            CHECK(*curve.points.back().r_squared == 1.0);
            std::uint32_t previous = 0;
            for (const auto& p : curve.points) {
                CHECK(p.round > previous);
                previous = p.round;
                if (p.r_squared) {
                    CHECK(*p.r_squared >= 0.0);
                    CHECK(*p.r_squared <= 1.0);
                }
            }
        }
    }

    TEST_CASE("flat fixture gives a flat rank curve") {
        const auto ds = load_matches(kDataDir + "/flat_season_4.csv");
        const auto curve = r2_curve(ds, PredictorKind::TableRank);
        REQUIRE(curve.points.size() == 6);
        for (const auto& p : curve.points) {
            CHECK(*p.r_squared == 1.0);
        }
        CHECK(threshold_round(curve, 0.8) == 1u);
    }

    TEST_CASE("all-draw opening rounds are undefined for goal difference") {
        const auto ds = load_matches(kDataDir + "/draw_opening_4.csv");
        const auto gd = r2_curve(ds, PredictorKind::GoalDifference);
        CHECK_FALSE(gd.points[0].r_squared.has_value());
        CHECK_FALSE(gd.points[1].r_squared.has_value());
        CHECK(gd.points[2].r_squared.has_value());
        const auto rank = r2_curve(ds, PredictorKind::TableRank);
        CHECK(rank.points[0].r_squared.has_value());
    }

    TEST_CASE("two-team season has no defined values") {
        const auto ds = parse_matches(std::string(kMatchHeader) + "\nS,1,A,B,1,0\n");
        const auto curve = r2_curve(ds, PredictorKind::TableRank);
        CHECK_FALSE(curve.points[0].r_squared.has_value());
    }
}

TEST_SUITE("threshold_round") {
    R2Curve make_curve(std::vector<std::optional<double>> values) {
        R2Curve c;
        for (std::size_t k = 0; k < values.size(); ++k) {
            c.points.push_back({static_cast<std::uint32_t>(k + 1), values[k]});
        }
        return c;
    }

    TEST_CASE("first crossing, skipping undefined rounds") {
        const auto c = make_curve({std::nullopt, 0.5, 0.79, 0.81, 0.7, 0.9});
        CHECK(threshold_round(c, 0.8) == 4u);
        CHECK(threshold_round(c, 0.5) == 2u);
        CHECK(threshold_round(c, 0.95) == std::nullopt);
        CHECK(threshold_round(make_curve({0.1, 0.2}), 0.8) == std::nullopt);
        CHECK(threshold_round(make_curve({1.0, 1.0}), 1.0) == 1u);
    }

    TEST_CASE("threshold domain") {
        const auto c = make_curve({0.5});
        CHECK_THROWS_AS(threshold_round(c, 0.0), Error);
        CHECK_THROWS_AS(threshold_round(c, 1.5), Error);
    }
}
