#pragma once

// Synthetic double round-robin seasons for tests.

#include "league.hpp"
#include "random.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace tablecast::testing {

inline std::string team_name(std::size_t k) {
    std::string name = "Team";
    name += static_cast<char>('A' + k / 26);
    name += static_cast<char>('A' + k % 26);
    return name;
}

inline double unit_uniform(Rng& rng) {
    return static_cast<double>(rng.next() >> 11) * 0x1.0p-53;
}

// Knuth's product method; fine for the small means used here.
inline std::uint32_t poisson(Rng& rng, double mean) {
    const double limit = std::exp(-mean);
    std::uint32_t k = 0;
    double p = unit_uniform(rng);
    while (p > limit) {
        ++k;
        p *= unit_uniform(rng);
    }
    return k;
}

/// Circle-method schedule: rounds 1..n-1 form the first leg, rounds n..2n-2
/// repeat the pairings with home and away swapped. `teams` must be even.
inline std::vector<std::vector<std::pair<std::size_t, std::size_t>>> double_round_robin(
    std::size_t teams) {
    std::vector<std::size_t> ring(teams);
    for (std::size_t k = 0; k < teams; ++k) {
        ring[k] = k;
    }
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> rounds;
    for (std::size_t r = 0; r + 1 < teams; ++r) {
        std::vector<std::pair<std::size_t, std::size_t>> games;
        for (std::size_t k = 0; k < teams / 2; ++k) {
            auto home = ring[k];
            auto away = ring[teams - 1 - k];
            if ((r + k) % 2 == 1) {
                std::swap(home, away);
            }
            games.emplace_back(home, away);
        }
        rounds.push_back(std::move(games));
        // Rotate every slot except the first.
        const auto last = ring.back();
        for (std::size_t k = teams - 1; k > 1; --k) {
            ring[k] = ring[k - 1];
        }
        ring[1] = last;
    }
    const std::size_t first_leg = rounds.size();
    for (std::size_t r = 0; r < first_leg; ++r) {
        auto games = rounds[r];
        for (auto& g : games) {
            std::swap(g.first, g.second);
        }
        rounds.push_back(std::move(games));
    }
    return rounds;
}

/// Goals are Poisson with a mean that grows with the scoring team's
/// strength (team 0 strongest) plus a small home edge.
inline std::vector<MatchRecord> synthetic_matches(std::size_t teams, std::uint64_t seed,
                                                  const std::string& season = "synthetic") {
    Rng rng(seed);
    std::vector<double> strength(teams);
    for (std::size_t k = 0; k < teams; ++k) {
        strength[k] = 1.0 - static_cast<double>(k) / static_cast<double>(teams) +
                      0.2 * unit_uniform(rng);
    }
    std::vector<MatchRecord> matches;
    const auto schedule = double_round_robin(teams);
    for (std::size_t r = 0; r < schedule.size(); ++r) {
        for (const auto& [home, away] : schedule[r]) {
            const double home_mean = 0.3 + 1.5 * strength[home] - 0.7 * strength[away] + 0.3;
            const double away_mean = 0.3 + 1.5 * strength[away] - 0.7 * strength[home];
            matches.push_back(MatchRecord{season, static_cast<std::uint32_t>(r + 1),
                                          team_name(home), team_name(away),
                                          poisson(rng, std::max(0.1, home_mean)),
                                          poisson(rng, std::max(0.1, away_mean))});
        }
    }
    return matches;
}

inline SeasonDataset synthetic_season(std::size_t teams, std::uint64_t seed,
                                      const std::string& season = "synthetic") {
    return make_dataset(synthetic_matches(teams, seed, season));
}

inline std::string to_match_csv(const std::vector<MatchRecord>& matches) {
    std::string out = std::string(kMatchHeader) + "\n";
    for (const auto& m : matches) {
        out += m.season + "," + std::to_string(m.round) + "," + m.home_team + "," + m.away_team +
               "," + std::to_string(m.home_goals) + "," + std::to_string(m.away_goals) + "\n";
    }
    return out;
}

}  // namespace tablecast::testing
