#include "league.hpp"

#include "csv.hpp"
#include "error.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace tablecast {

namespace {

std::string at_line(std::size_t line) {
    return "line " + std::to_string(line) + ": ";
}

bool parse_uint(const std::string& field, std::uint32_t& out) {
    if (field.empty()) {
        return false;
    }
    const auto* first = field.data();
    const auto* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

// Returns an empty string when the match is acceptable, otherwise the reason.
std::string check_match(const MatchRecord& m) {
    if (m.round == 0) {
        return "round must be a positive integer";
    }
    if (m.home_team.empty() || m.away_team.empty()) {
        return "team names must not be empty";
    }
    if (m.home_team == m.away_team) {
        return "team '" + m.home_team + "' cannot play itself";
    }
    return {};
}

bool ranks_before(const StandingsRow& a, const StandingsRow& b) {
    if (a.points != b.points) {
        return a.points > b.points;
    }
    if (a.goal_difference != b.goal_difference) {
        return a.goal_difference > b.goal_difference;
    }
    if (a.goals_for != b.goals_for) {
        return a.goals_for > b.goals_for;
    }
    return a.team < b.team;
}

void credit(StandingsRow& row, std::uint32_t scored, std::uint32_t conceded) {
    ++row.played;
    row.goals_for += scored;
    row.goals_against += conceded;
    if (scored > conceded) {
        ++row.won;
        row.points += 3;
    } else if (scored == conceded) {
        ++row.drawn;
        row.points += 1;
    } else {
        ++row.lost;
    }
}

}  // namespace

SeasonDataset make_dataset(std::vector<MatchRecord> matches) {
    if (matches.empty()) {
        throw Error(ErrorCode::EmptyInput, "season has no matches");
    }
    SeasonDataset ds;
    ds.season = matches.front().season;
    std::set<std::string> roster;
    std::set<std::pair<std::uint32_t, std::string>> appearances;
    for (std::size_t k = 0; k < matches.size(); ++k) {
        const auto& m = matches[k];
        const std::string where = "match " + std::to_string(k + 1) + ": ";
        if (auto why = check_match(m); !why.empty()) {
            throw Error(ErrorCode::Consistency, where + why);
        }
        if (m.season != ds.season) {
            throw Error(ErrorCode::Consistency, where + "season '" + m.season +
                                                    "' differs from '" + ds.season + "'");
        }
        for (const auto* team : {&m.home_team, &m.away_team}) {
            if (!appearances.emplace(m.round, *team).second) {
                throw Error(ErrorCode::Consistency, where + "team '" + *team +
                                                        "' plays twice in round " +
                                                        std::to_string(m.round));
            }
            roster.insert(*team);
        }
        ds.rounds = std::max(ds.rounds, m.round);
    }
    if (roster.size() < 2) {
        throw Error(ErrorCode::Consistency, "season needs at least 2 teams");
    }
    ds.teams.assign(roster.begin(), roster.end());
    ds.matches = std::move(matches);
    return ds;
}

SeasonDataset parse_matches(std::istream& in) {
    std::string raw;
    std::size_t line_no = 0;
    bool have_header = false;
    std::vector<std::string> fields;
    std::vector<MatchRecord> matches;
    std::map<std::pair<std::uint32_t, std::string>, std::size_t> seen;

    while (std::getline(in, raw)) {
        ++line_no;
        const auto line = csv::clean_line(raw, line_no == 1);
        if (csv::is_blank(line)) {
            continue;
        }
        if (!csv::split_line(line, fields)) {
            throw Error(ErrorCode::Parse, at_line(line_no) + "unterminated quoted field");
        }
        if (!have_header) {
            std::string joined;
            for (std::size_t i = 0; i < fields.size(); ++i) {
                joined += (i ? "," : "") + fields[i];
            }
            if (joined != kMatchHeader) {
                throw Error(ErrorCode::Parse, at_line(line_no) + "unknown header '" + joined +
                                                  "', expected '" + std::string(kMatchHeader) +
                                                  "'");
            }
            have_header = true;
            continue;
        }
        if (fields.size() != 6) {
            throw Error(ErrorCode::Parse, at_line(line_no) + "expected 6 fields, got " +
                                              std::to_string(fields.size()));
        }
        MatchRecord m;
        m.season = fields[0];
        m.home_team = fields[2];
        m.away_team = fields[3];
        if (!parse_uint(fields[1], m.round)) {
            throw Error(ErrorCode::Parse, at_line(line_no) + "round '" + fields[1] +
                                              "' is not a nonnegative integer");
        }
        if (!parse_uint(fields[4], m.home_goals) || !parse_uint(fields[5], m.away_goals)) {
            throw Error(ErrorCode::Parse, at_line(line_no) + "goals must be nonnegative integers");
        }
        if (auto why = check_match(m); !why.empty()) {
            throw Error(ErrorCode::Parse, at_line(line_no) + why);
        }
        if (!matches.empty() && m.season != matches.front().season) {
            throw Error(ErrorCode::Parse, at_line(line_no) + "season '" + m.season +
                                              "' differs from '" + matches.front().season +
                                              "'; one season per file");
        }
        for (const auto* team : {&m.home_team, &m.away_team}) {
            auto [it, inserted] = seen.emplace(std::make_pair(m.round, *team), line_no);
            if (!inserted) {
                throw Error(ErrorCode::Parse, at_line(line_no) + "team '" + *team +
                                                  "' already plays in round " +
                                                  std::to_string(m.round) + " (line " +
                                                  std::to_string(it->second) + ")");
            }
        }
        matches.push_back(std::move(m));
    }
    if (matches.empty()) {
        throw Error(ErrorCode::EmptyInput, have_header ? "match file has a header but no matches"
                                                       : "match file is empty");
    }
    return make_dataset(std::move(matches));
}

SeasonDataset parse_matches(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_matches(in);
}

SeasonDataset load_matches(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::Io, "cannot open match file '" + path + "'");
    }
    return parse_matches(in);
}

const StandingsRow* StandingsTable::find(std::string_view team) const {
    for (const auto& row : rows) {
        if (row.team == team) {
            return &row;
        }
    }
    return nullptr;
}

std::vector<std::string> StandingsTable::team_order() const {
    std::vector<std::string> order;
    order.reserve(rows.size());
    for (const auto& row : rows) {
        order.push_back(row.team);
    }
    return order;
}

StandingsTable standings_at_round(const SeasonDataset& dataset, std::uint32_t round) {
    if (round < 1 || round > dataset.rounds) {
        throw Error(ErrorCode::Domain, "round " + std::to_string(round) + " outside 1.." +
                                           std::to_string(dataset.rounds));
    }
    std::unordered_map<std::string, StandingsRow> by_team;
    for (const auto& team : dataset.teams) {
        by_team[team].team = team;
    }
    for (const auto& m : dataset.matches) {
        if (m.round > round) {
            continue;
        }
        credit(by_team.at(m.home_team), m.home_goals, m.away_goals);
        credit(by_team.at(m.away_team), m.away_goals, m.home_goals);
    }

    StandingsTable table;
    table.season = dataset.season;
    table.round = round;
    table.rows.reserve(by_team.size());
    for (auto& [team, row] : by_team) {
        row.goal_difference =
            static_cast<std::int64_t>(row.goals_for) - static_cast<std::int64_t>(row.goals_against);
        table.rows.push_back(std::move(row));
    }
    std::sort(table.rows.begin(), table.rows.end(), ranks_before);
    for (std::size_t k = 0; k < table.rows.size(); ++k) {
        table.rows[k].rank = static_cast<std::uint32_t>(k + 1);
    }
    return table;
}

StandingsTable final_standings(const SeasonDataset& dataset) {
    return standings_at_round(dataset, dataset.rounds);
}

namespace {

const StandingsRow& lookup(const StandingsTable& table, const std::string& team) {
    const auto* row = table.find(team);
    if (row == nullptr) {
        throw Error(ErrorCode::Consistency, "team '" + team + "' is not in the round " +
                                                std::to_string(table.round) + " table");
    }
    return *row;
}

void require_full_order(const StandingsTable& table, std::span<const std::string> team_order) {
    if (team_order.size() != table.rows.size()) {
        throw Error(ErrorCode::Consistency,
                    "team order lists " + std::to_string(team_order.size()) +
                        " teams but the table has " + std::to_string(table.rows.size()));
    }
}

}  // namespace

Ranking rank_vector(const StandingsTable& table, std::span<const std::string> team_order) {
    require_full_order(table, team_order);
    std::vector<std::int32_t> places;
    places.reserve(team_order.size());
    for (const auto& team : team_order) {
        places.push_back(static_cast<std::int32_t>(lookup(table, team).rank));
    }
    // Throws NotPermutation if team_order repeats a team.
    return Ranking::from_places(std::move(places));
}

std::vector<std::int64_t> gd_vector(const StandingsTable& table,
                                    std::span<const std::string> team_order) {
    require_full_order(table, team_order);
    std::vector<std::int64_t> gd;
    gd.reserve(team_order.size());
    for (const auto& team : team_order) {
        gd.push_back(lookup(table, team).goal_difference);
    }
    return gd;
}

}  // namespace tablecast
