#include "table_io.hpp"

#include "csv.hpp"
#include "error.hpp"
#include "predictor.hpp"

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace tablecast {

namespace {

bool parse_int(std::string_view s, std::int32_t& out) {
    if (s.empty()) {
        return false;
    }
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

TableFile parse_json_table(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::Parse, std::string("invalid JSON table: ") + e.what());
    }
    if (!doc.is_array()) {
        throw Error(ErrorCode::Parse, "JSON table must be an array");
    }
    if (doc.empty()) {
        throw Error(ErrorCode::EmptyInput, "JSON table is empty");
    }
    TableFile table;
    if (doc.front().is_string()) {
        for (const auto& item : doc) {
            if (!item.is_string()) {
                throw Error(ErrorCode::Parse, "JSON team list mixes names and non-names");
            }
            table.teams.push_back(item.get<std::string>());
        }
    } else {
        for (const auto& item : doc) {
            if (!item.is_number_integer()) {
                throw Error(ErrorCode::Parse, "JSON ranking must contain only integers");
            }
            table.places.push_back(item.get<std::int32_t>());
        }
    }
    return table;
}

TableFile parse_csv_table(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    std::vector<std::string> fields;
    bool first_record = true;
    bool team_list = false;
    std::map<std::int32_t, std::string> by_position;
    TableFile table;

    while (std::getline(in, raw)) {
        ++line_no;
        const auto line = csv::clean_line(raw, line_no == 1);
        if (csv::is_blank(line)) {
            continue;
        }
        const std::string where = "line " + std::to_string(line_no) + ": ";
        if (!csv::split_line(line, fields)) {
            throw Error(ErrorCode::Parse, where + "unterminated quoted field");
        }
        if (first_record) {
            first_record = false;
            if (fields.size() == 2 && fields[0] == "position" && fields[1] == "team") {
                team_list = true;
                continue;
            }
            std::int32_t probe = 0;
            if (fields.size() == 1 && !parse_int(fields[0], probe)) {
                continue;  // single-column header such as "place"
            }
            if (fields.size() != 1) {
                throw Error(ErrorCode::Parse,
                            where + "expected header 'position,team' or a single integer column");
            }
        }
        if (team_list) {
            std::int32_t pos = 0;
            if (fields.size() != 2) {
                throw Error(ErrorCode::Parse, where + "expected 2 fields, got " +
                                                  std::to_string(fields.size()));
            }
            if (!parse_int(fields[0], pos) || pos < 1) {
                throw Error(ErrorCode::Parse, where + "position '" + fields[0] +
                                                  "' is not a positive integer");
            }
            if (fields[1].empty()) {
                throw Error(ErrorCode::Parse, where + "empty team name");
            }
            if (!by_position.emplace(pos, fields[1]).second) {
                throw Error(ErrorCode::Parse, where + "duplicate position " + fields[0]);
            }
        } else {
            std::int32_t place = 0;
            if (fields.size() != 1 || !parse_int(fields[0], place)) {
                throw Error(ErrorCode::Parse, where + "expected a single integer");
            }
            table.places.push_back(place);
        }
    }

    if (team_list) {
        std::int32_t expected = 1;
        for (auto& [pos, team] : by_position) {
            if (pos != expected++) {
                throw Error(ErrorCode::Parse, "positions must run 1.." +
                                                  std::to_string(by_position.size()) +
                                                  " without gaps");
            }
            table.teams.push_back(std::move(team));
        }
    }
    if (table.teams.empty() && table.places.empty()) {
        throw Error(ErrorCode::EmptyInput, "table file has no entries");
    }
    return table;
}

}  // namespace

TableFile parse_table(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        throw Error(ErrorCode::EmptyInput, "table file is empty");
    }
    if (text[first] == '[' || text[first] == '{') {
        return parse_json_table(text);
    }
    return parse_csv_table(text);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::Io, "cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

TableFile load_table(const std::string& path) {
    return parse_table(read_text_file(path));
}

ScoredPair align_tables(const TableFile& predicted, const std::optional<TableFile>& actual) {
    if (predicted.is_team_list()) {
        if (!actual || !actual->is_team_list()) {
            throw Error(ErrorCode::Consistency,
                        "a team-list prediction needs a team-list actual table");
        }
        auto pred = order_to_ranking(predicted.teams, actual->teams);
        auto identity = Ranking::identity(pred.size());
        return {std::move(pred), std::move(identity)};
    }
    auto pred = Ranking::from_places(predicted.places);
    if (!actual) {
        auto identity = Ranking::identity(pred.size());
        return {std::move(pred), std::move(identity)};
    }
    if (actual->is_team_list()) {
        throw Error(ErrorCode::Consistency, "cannot compare a ranking with a team list");
    }
    if (actual->places.size() != pred.size()) {
        throw Error(ErrorCode::Dimension, "ranking sizes differ: " + std::to_string(pred.size()) +
                                              " vs " + std::to_string(actual->places.size()));
    }
    return {std::move(pred), Ranking::from_places(actual->places)};
}

}  // namespace tablecast
