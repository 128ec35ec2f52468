#include "doctest.h"

#include "error.hpp"
#include "predictor.hpp"
#include "synthetic.hpp"

#include <algorithm>
#include <map>
#include <tuple>

using namespace tablecast;

namespace {

const std::string kDataDir = TABLECAST_DATA_DIR;
const std::string kHeader = std::string(kMatchHeader) + "\n";

// Oracle: accumulate totals straight from the match list and sort with a
// tuple key, without going through the standings code.
std::vector<std::string> oracle_gd_order(const SeasonDataset& ds, std::uint32_t round) {
    struct Totals {
        long gf = 0, ga = 0, pts = 0;
    };
    std::map<std::string, Totals> t;
    for (const auto& team : ds.teams) t[team];
    for (const auto& m : ds.matches) {
        if (m.round > round) continue;
        auto& h = t[m.home_team];
        auto& a = t[m.away_team];
        h.gf += m.home_goals;
        h.ga += m.away_goals;
        a.gf += m.away_goals;
        a.ga += m.home_goals;
        if (m.home_goals > m.away_goals) h.pts += 3;
        else if (m.home_goals < m.away_goals) a.pts += 3;
        else { h.pts += 1; a.pts += 1; }
    }
    std::vector<std::tuple<long, long, long, std::string>> keys;
    for (const auto& [team, x] : t) {
        // Negate so that ascending tuple order is the wanted order.
        keys.emplace_back(-(x.gf - x.ga), -x.pts, -x.gf, team);
    }
    std::sort(keys.begin(), keys.end());
    std::vector<std::string> order;
    for (const auto& k : keys) order.push_back(std::get<3>(k));
    return order;
}

}  // namespace

TEST_SUITE("predict") {
    TEST_CASE("rank prediction of the final table is the identity") {
        const auto ds = load_matches(kDataDir + "/synthetic_season_14.csv");
        const auto final_table = final_standings(ds);
        const auto order = final_table.team_order();
        const auto p = predict_by_rank(final_table, order);
        CHECK(p == Ranking::identity(14));
        CHECK(mae(p) == 0);
    }

    TEST_CASE("round-1 rank prediction of the synthetic fixture") {
        const auto ds = load_matches(kDataDir + "/synthetic_season_14.csv");
        const auto order = final_standings(ds).team_order();
        CHECK(predict_by_rank(standings_at_round(ds, 1), order) ==
              Ranking::from_places({1, 12, 11, 10, 2, 4, 6, 7, 9, 8, 5, 3, 13, 14}));
    }

    TEST_CASE("all-draws table predicts alphabetical order") {
        const auto ds = parse_matches(kHeader + "S,1,D,C,1,1\nS,1,B,A,0,0\n");
        const auto t = standings_at_round(ds, 1);
        CHECK(predicted_order(t, PredictorKind::TableRank) ==
              std::vector<std::string>{"C", "D", "A", "B"});
        CHECK(predicted_order(t, PredictorKind::GoalDifference) ==
              std::vector<std::string>{"C", "D", "A", "B"});
    }

    TEST_CASE("goal difference outranks points") {
        // A: +5 with 4 points, B: +2 with 9 points.
        const auto ds = parse_matches(kHeader +
                                      "S,1,A,X,6,0\nS,1,B,Y,1,0\n"
                                      "S,2,A,Y,1,1\nS,2,B,X,1,0\n"
                                      "S,3,A,B,0,1\nS,3,X,Y,0,0\n");
        const auto t = standings_at_round(ds, 3);
        REQUIRE(t.find("A")->goal_difference == 5);
        REQUIRE(t.find("A")->points == 4);
        REQUIRE(t.find("B")->goal_difference == 3);
        REQUIRE(t.find("B")->points == 9);
        const auto order = predicted_order(t, PredictorKind::GoalDifference);
        CHECK(order.front() == "A");
        CHECK(order[1] == "B");
        CHECK(t.team_order().front() == "B");
    }

    TEST_CASE("distinct aligned gd gives the rank prediction") {
        const auto ds = load_matches(kDataDir + "/flat_season_4.csv");
        const auto order = final_standings(ds).team_order();
        for (std::uint32_t r = 1; r <= ds.rounds; ++r) {
            const auto t = standings_at_round(ds, r);
            CHECK(predict_by_gd(t, order) == predict_by_rank(t, order));
        }
    }

    TEST_CASE("gd prediction agrees with an independent re-sort") {
        const auto ds = load_matches(kDataDir + "/synthetic_season_14.csv");
        const auto order = final_standings(ds).team_order();
        for (std::uint32_t r : {1u, 3u, 9u, 26u}) {
            const auto t = standings_at_round(ds, r);
            const auto expected = oracle_gd_order(ds, r);
            CHECK(predicted_order(t, PredictorKind::GoalDifference) == expected);
            CHECK(predict_by_gd(t, order) == order_to_ranking(expected, order));
        }
    }

    TEST_CASE("order_to_ranking errors") {
        const std::vector<std::string> final_order = {"A", "B", "C"};
        const std::vector<std::string> missing = {"A", "B", "D"};
        const std::vector<std::string> twice = {"A", "A", "B"};
        const std::vector<std::string> shorter = {"A", "B"};
        CHECK_THROWS_AS(order_to_ranking(missing, final_order), Error);
        CHECK_THROWS_AS(order_to_ranking(twice, final_order), Error);
        CHECK_THROWS_AS(order_to_ranking(shorter, final_order), Error);
        const std::vector<std::string> predicted = {"C", "A", "B"};
        CHECK(order_to_ranking(predicted, final_order) == Ranking::from_places({2, 3, 1}));
    }
}

TEST_SUITE("evaluate_season") {
    TEST_CASE("report contract") {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            const auto ds = testing::synthetic_season(14, seed);
            const auto report = evaluate_season(ds);
            CHECK(report.teams == 14);
            CHECK(report.baseline_mae == Rational(65, 14));
            CHECK(report.max_mae == 7);
            REQUIRE(report.records.size() == 2 * ds.rounds);
            for (const auto& rec : report.records) {
                CHECK(rec.mae >= 0);
                CHECK(rec.mae <= report.max_mae);
                const Rational scaled = rec.mae * 14;
                CHECK(boost::multiprecision::denominator(scaled) == 1);
                CHECK(boost::multiprecision::numerator(scaled) % 2 == 0);
                CHECK(is_permutation_of_1_to_n(rec.predicted.places()));
            }
            const auto& last_rank = report.records[report.records.size() - 2];
            CHECK(last_rank.round == ds.rounds);
            CHECK(last_rank.strategy == PredictorKind::TableRank);
            CHECK(last_rank.mae == 0);
            CHECK(last_rank.mse == 0);
            CHECK(report.summaries[0].first_round_below.has_value());
            CHECK(*report.summaries[0].first_round_below <= ds.rounds);
            CHECK(report.summaries[0].best_mae == 0);
        }
    }

    TEST_CASE("deterministic across runs") {
        const auto ds = load_matches(kDataDir + "/synthetic_season_14.csv");
        const auto a = evaluate_season(ds, 0.3);
        const auto b = evaluate_season(load_matches(kDataDir + "/synthetic_season_14.csv"), 0.3);
        REQUIRE(a.records.size() == b.records.size());
        for (std::size_t k = 0; k < a.records.size(); ++k) {
            CHECK(a.records[k].predicted == b.records[k].predicted);
            CHECK(a.records[k].mae == b.records[k].mae);
        }
        CHECK(a.gd_better_rounds == b.gd_better_rounds);
    }

    TEST_CASE("baseline fraction must be positive") {
        const auto ds = load_matches(kDataDir + "/flat_season_4.csv");
        CHECK_THROWS_AS(evaluate_season(ds, 0.0), Error);
        const auto report = evaluate_season(ds, 0.5);
        // The flat fixture is perfect from round 1.
        CHECK(report.summaries[0].first_round_below == 1u);
        CHECK(report.summaries[1].first_round_below == 1u);
        CHECK(report.gd_better_rounds.empty());
    }
}
