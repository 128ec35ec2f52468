// Writes a synthetic season CSV: make_fixture TEAMS SEED SEASON > file.csv

#include "synthetic.hpp"

#include <cstdio>
#include <cstdlib>

int main(int argc, char** argv) {
    if (argc != 4) {
        std::fprintf(stderr, "usage: make_fixture TEAMS SEED SEASON\n");
        return 2;
    }
    const auto teams = static_cast<std::size_t>(std::strtoul(argv[1], nullptr, 10));
    const auto seed = std::strtoull(argv[2], nullptr, 10);
    const auto csv = tablecast::testing::to_match_csv(
        tablecast::testing::synthetic_matches(teams, seed, argv[3]));
    std::fputs(csv.c_str(), stdout);
    return 0;
}
