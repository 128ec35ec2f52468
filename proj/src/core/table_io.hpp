#pragma once

#include "ranking.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tablecast {

/// Contents of a table file. Exactly one of the two members is filled:
/// `teams` for a team list in order (CSV `position,team` or a JSON array of
/// names), `places` for a bare ranking (one integer per line, optional
/// header, or a JSON array of integers).
struct TableFile {
    std::vector<std::string> teams;
    std::vector<std::int32_t> places;

    bool is_team_list() const noexcept { return !teams.empty(); }
};

TableFile parse_table(std::string_view text);
TableFile load_table(const std::string& path);

struct ScoredPair {
    Ranking predicted;
    Ranking actual;
};

/// Aligns a prediction with the actual table.
///
/// Two team lists: the prediction is re-expressed against the actual order
/// and compared with the identity. Two rankings: compared entry by entry.
/// A ranking with no actual table is compared with the identity.
ScoredPair align_tables(const TableFile& predicted, const std::optional<TableFile>& actual);

std::string read_text_file(const std::string& path);

}  // namespace tablecast
