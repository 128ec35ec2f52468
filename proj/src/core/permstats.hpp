#pragma once

#include "rational.hpp"
#include "ranking.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tablecast {

inline constexpr std::uint32_t kDefaultOracleCap = 9;

// Distance metrics. The one-argument forms compare against the identity,
// i.e. the true final table 1..n.

/// Sum of |pred(i) - actual(i)|. Throws ErrorCode::Dimension on size mismatch.
std::int64_t footrule_score(const Ranking& pred, const Ranking& actual);
std::int64_t footrule_score(const Ranking& pred);

Rational mae(const Ranking& pred, const Ranking& actual);
Rational mae(const Ranking& pred);

Rational mse(const Ranking& pred, const Ranking& actual);
Rational mse(const Ranking& pred);

/// Exact summary of the footrule score S and MAE = S/n when the prediction
/// is a uniformly random permutation.
///
/// For even n every field is a closed form. For odd n the maximum is
/// floor(n^2/2) and the maximizer count is only available by enumeration,
/// so `worst_count` is empty when n exceeds the oracle cap; `generalized`
/// marks odd-n results.
struct ScoreStats {
    std::uint32_t n = 0;
    Rational expected_score;
    Rational expected_mae;
    Rational variance_score;
    Rational variance_mae;
    BigInt max_score;
    Rational max_mae;
    std::optional<BigInt> worst_count;
    std::optional<Rational> worst_probability;
    Rational correct_probability;
    bool generalized = false;
};

ScoreStats score_stats(std::uint32_t n, std::uint32_t oracle_cap = kDefaultOracleCap);

/// Exact distribution of S over all n! permutations.
struct ScoreDistribution {
    std::uint32_t n = 0;
    std::map<std::int64_t, std::uint64_t> counts;

    BigInt total() const;
    Rational mean() const;
    Rational variance() const;
    std::int64_t max_score() const;
    std::uint64_t max_count() const;
};

/// Full enumeration; refuses with ErrorCode::OracleCap when n > oracle_cap.
ScoreDistribution brute_force_distribution(std::uint32_t n,
                                           std::uint32_t oracle_cap = kDefaultOracleCap);

struct MonteCarloSummary {
    std::uint32_t n = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    double mean = 0.0;
    double variance = 0.0;  // unbiased sample variance of MAE (0 for one sample)
    double min = 0.0;
    double max = 0.0;
    BigInt score_sum;
    BigInt score_square_sum;
};

inline constexpr std::uint64_t kMonteCarloChunk = 1 << 16;

/// Samples uniformly random rankings and summarizes their MAE.
///
/// Samples are split into fixed-size chunks, each with its own generator
/// seeded from (seed, chunk index). Scores are accumulated as integers, so
/// the summary is bit-identical for any `threads` value (0 = hardware).
MonteCarloSummary monte_carlo_mae(std::uint32_t n, std::uint64_t samples, std::uint64_t seed,
                                  unsigned threads = 0);

struct Check {
    std::string name;
    std::string expected;
    std::string observed;
    bool pass = false;
};

/// Compares every closed form in score_stats(n) against enumeration.
std::vector<Check> verify_exact(std::uint32_t n, std::uint32_t oracle_cap = kDefaultOracleCap);

/// Checks the Monte Carlo mean against E[MAE] within 3 standard errors and
/// the sampled range against [0, max MAE].
std::vector<Check> verify_monte_carlo(std::uint32_t n, std::uint64_t samples, std::uint64_t seed,
                                      unsigned threads = 0);

}  // namespace tablecast
