#pragma once

#include "ranking.hpp"

#include <cstdint>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tablecast {

struct MatchRecord {
    std::string season;
    std::uint32_t round = 0;
    std::string home_team;
    std::string away_team;
    std::uint32_t home_goals = 0;
    std::uint32_t away_goals = 0;
};

/// One self-contained season. `teams` is the roster in ascending name order;
/// `rounds` is the highest round number present.
struct SeasonDataset {
    std::string season;
    std::vector<std::string> teams;
    std::vector<MatchRecord> matches;
    std::uint32_t rounds = 0;
};

inline constexpr std::string_view kMatchHeader =
    "season,round,home_team,away_team,home_goals,away_goals";

/// Validates matches and infers the roster and round count. Throws
/// ErrorCode::Consistency when a team plays twice in one round, a team meets
/// itself, a round is 0, or two season ids are mixed.
SeasonDataset make_dataset(std::vector<MatchRecord> matches);

/// Reads the match CSV. Errors name the offending line number.
SeasonDataset parse_matches(std::istream& in);
SeasonDataset parse_matches(std::string_view text);
SeasonDataset load_matches(const std::string& path);

struct StandingsRow {
    std::string team;
    std::uint32_t played = 0;
    std::uint32_t won = 0;
    std::uint32_t drawn = 0;
    std::uint32_t lost = 0;
    std::uint32_t goals_for = 0;
    std::uint32_t goals_against = 0;
    std::int64_t goal_difference = 0;
    std::uint32_t points = 0;
    std::uint32_t rank = 0;
};

struct StandingsTable {
    std::string season;
    std::uint32_t round = 0;
    std::vector<StandingsRow> rows;  // rows[k].rank == k + 1

    const StandingsRow* find(std::string_view team) const;
    std::vector<std::string> team_order() const;
};

/// Table after every match with round <= r. Order: points, goal difference,
/// goals for (all descending), then team name ascending. Teams that have not
/// played yet are still listed.
StandingsTable standings_at_round(const SeasonDataset& dataset, std::uint32_t round);
StandingsTable final_standings(const SeasonDataset& dataset);

/// P(i): the table rank of team_order[i]. Pass the final-table order so that
/// index i means the team that finished i-th.
Ranking rank_vector(const StandingsTable& table, std::span<const std::string> team_order);

/// Goal difference of team_order[i] at the table's round.
std::vector<std::int64_t> gd_vector(const StandingsTable& table,
                                    std::span<const std::string> team_order);

}  // namespace tablecast
