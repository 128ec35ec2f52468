#include "permstats.hpp"

#include "error.hpp"
#include "random.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <thread>

namespace tablecast {

namespace {

void require_same_size(const Ranking& pred, const Ranking& actual) {
    if (pred.size() != actual.size()) {
        throw Error(ErrorCode::Dimension, "ranking sizes differ: " + std::to_string(pred.size()) +
                                              " vs " + std::to_string(actual.size()));
    }
}

void require_league_size(std::uint32_t n) {
    if (n < 2) {
        throw Error(ErrorCode::Domain, "league size must be at least 2, got " + std::to_string(n));
    }
}

std::int64_t identity_score(std::span<const std::int32_t> places) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < places.size(); ++i) {
        s += std::abs(static_cast<std::int64_t>(places[i]) - static_cast<std::int64_t>(i + 1));
    }
    return s;
}

}  // namespace

std::int64_t footrule_score(const Ranking& pred, const Ranking& actual) {
    require_same_size(pred, actual);
    std::int64_t s = 0;
    for (std::size_t i = 0; i < pred.size(); ++i) {
        s += std::abs(static_cast<std::int64_t>(pred[i]) - actual[i]);
    }
    return s;
}

std::int64_t footrule_score(const Ranking& pred) {
    return identity_score(pred.places());
}

Rational mae(const Ranking& pred, const Ranking& actual) {
    return Rational(footrule_score(pred, actual), static_cast<std::int64_t>(pred.size()));
}

Rational mae(const Ranking& pred) {
    return mae(pred, Ranking::identity(pred.size()));
}

Rational mse(const Ranking& pred, const Ranking& actual) {
    require_same_size(pred, actual);
    BigInt sum = 0;
    for (std::size_t i = 0; i < pred.size(); ++i) {
        const std::int64_t d = static_cast<std::int64_t>(pred[i]) - actual[i];
        sum += d * d;
    }
    return Rational(sum, static_cast<std::int64_t>(pred.size()));
}

Rational mse(const Ranking& pred) {
    return mse(pred, Ranking::identity(pred.size()));
}

ScoreStats score_stats(std::uint32_t n, std::uint32_t oracle_cap) {
    require_league_size(n);
    const BigInt nn = BigInt(n) * n;

    ScoreStats st;
    st.n = n;
    st.expected_score = Rational(nn - 1, 3);
    st.expected_mae = st.expected_score / n;
    st.variance_score = Rational(BigInt(n + 1) * (2 * nn + 7), 45);
    st.variance_mae = st.variance_score / nn;
    st.max_score = nn / 2;
    st.max_mae = Rational(st.max_score, n);
    st.correct_probability = Rational(BigInt(1), factorial(n));

    if (n % 2 == 0) {
        const BigInt half_fact = factorial(n / 2);
        st.worst_count = half_fact * half_fact;
        st.worst_probability = Rational(BigInt(1), binomial(n, n / 2));
    } else {
        st.generalized = true;
        if (n <= oracle_cap) {
            const auto dist = brute_force_distribution(n, oracle_cap);
            st.worst_count = BigInt(dist.max_count());
            st.worst_probability = Rational(*st.worst_count, factorial(n));
        }
    }
    return st;
}

BigInt ScoreDistribution::total() const {
    BigInt t = 0;
    for (const auto& [score, count] : counts) {
        t += count;
    }
    return t;
}

Rational ScoreDistribution::mean() const {
    BigInt weighted = 0;
    for (const auto& [score, count] : counts) {
        weighted += BigInt(score) * count;
    }
    return Rational(weighted, total());
}

Rational ScoreDistribution::variance() const {
    BigInt second = 0;
    for (const auto& [score, count] : counts) {
        second += BigInt(score) * score * count;
    }
    const Rational m = mean();
    return Rational(second, total()) - m * m;
}

std::int64_t ScoreDistribution::max_score() const {
    return counts.empty() ? 0 : counts.rbegin()->first;
}

std::uint64_t ScoreDistribution::max_count() const {
    return counts.empty() ? 0 : counts.rbegin()->second;
}

ScoreDistribution brute_force_distribution(std::uint32_t n, std::uint32_t oracle_cap) {
    require_league_size(n);
    if (n > oracle_cap) {
        throw Error(ErrorCode::OracleCap,
                    "refusing to enumerate " + std::to_string(n) + "! permutations (oracle cap is " +
                        std::to_string(oracle_cap) + "; raise it explicitly if intended)");
    }
    ScoreDistribution dist;
    dist.n = n;
    std::vector<std::int32_t> places(n);
    std::iota(places.begin(), places.end(), 1);
    do {
        ++dist.counts[identity_score(places)];
    } while (std::next_permutation(places.begin(), places.end()));
    return dist;
}

MonteCarloSummary monte_carlo_mae(std::uint32_t n, std::uint64_t samples, std::uint64_t seed,
                                  unsigned threads) {
    require_league_size(n);
    if (samples == 0) {
        throw Error(ErrorCode::Domain, "monte carlo needs at least one sample");
    }

    struct ChunkResult {
        std::uint64_t sum = 0;
        std::uint64_t square_sum = 0;
        std::int64_t min = std::numeric_limits<std::int64_t>::max();
        std::int64_t max = 0;
    };

    const std::uint64_t chunks = (samples + kMonteCarloChunk - 1) / kMonteCarloChunk;
    std::vector<ChunkResult> results(chunks);

    auto run_chunk = [&](std::uint64_t c) {
        Rng rng(mix_seed(seed, c));
        const std::uint64_t begin = c * kMonteCarloChunk;
        const std::uint64_t end = std::min(samples, begin + kMonteCarloChunk);
        ChunkResult r;
        for (std::uint64_t k = begin; k < end; ++k) {
            const auto s = footrule_score(random_ranking(n, rng));
            r.sum += static_cast<std::uint64_t>(s);
            r.square_sum += static_cast<std::uint64_t>(s) * static_cast<std::uint64_t>(s);
            r.min = std::min(r.min, s);
            r.max = std::max(r.max, s);
        }
        results[c] = r;
    };

    unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, chunks));
    if (workers <= 1) {
        for (std::uint64_t c = 0; c < chunks; ++c) {
            run_chunk(c);
        }
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::uint64_t c = w; c < chunks; c += workers) {
                    run_chunk(c);
                }
            });
        }
        for (auto& t : pool) {
            t.join();
        }
    }

    MonteCarloSummary out;
    out.n = n;
    out.samples = samples;
    out.seed = seed;
    std::int64_t lo = std::numeric_limits<std::int64_t>::max();
    std::int64_t hi = 0;
    for (const auto& r : results) {
        out.score_sum += r.sum;
        out.score_square_sum += r.square_sum;
        lo = std::min(lo, r.min);
        hi = std::max(hi, r.max);
    }

    const BigInt count = samples;
    out.mean = to_double(Rational(out.score_sum, count * n));
    if (samples > 1) {
        // Unbiased variance of S, exact, then scaled to MAE.
        const Rational var_s = (Rational(out.score_square_sum) -
                                Rational(out.score_sum * out.score_sum, count)) /
                               (count - 1);
        out.variance = to_double(var_s / (BigInt(n) * n));
    }
    out.min = static_cast<double>(lo) / n;
    out.max = static_cast<double>(hi) / n;
    return out;
}

namespace {

Check make_check(std::string name, const Rational& expected, const Rational& observed) {
    return Check{std::move(name), to_fraction_string(expected), to_fraction_string(observed),
                 expected == observed};
}

}  // namespace

std::vector<Check> verify_exact(std::uint32_t n, std::uint32_t oracle_cap) {
    const auto dist = brute_force_distribution(n, oracle_cap);
    const auto st = score_stats(n, oracle_cap);
    const std::string tag = "n=" + std::to_string(n) + " ";

    std::vector<Check> checks;
    checks.push_back(make_check(tag + "total=n!", Rational(factorial(n)), Rational(dist.total())));
    checks.push_back(make_check(tag + "E[S]=(n^2-1)/3", st.expected_score, dist.mean()));
    checks.push_back(make_check(tag + "E[MAE]=(n^2-1)/(3n)", st.expected_mae, dist.mean() / n));
    checks.push_back(make_check(tag + "Var[S]=(n+1)(2n^2+7)/45", st.variance_score, dist.variance()));
    checks.push_back(make_check(tag + "Var[MAE]=Var[S]/n^2", st.variance_mae,
                                dist.variance() / (BigInt(n) * n)));
    checks.push_back(make_check(tag + (n % 2 == 0 ? "max S=n^2/2" : "max S=floor(n^2/2)"),
                                Rational(st.max_score), Rational(dist.max_score())));
    if (n % 2 == 0) {
        checks.push_back(make_check(tag + "max count=((n/2)!)^2", Rational(*st.worst_count),
                                    Rational(BigInt(dist.max_count()))));
        checks.push_back(make_check(tag + "P(worst)=1/C(n,n/2)", *st.worst_probability,
                                    Rational(BigInt(dist.max_count()), factorial(n))));
    }
    checks.push_back(make_check(tag + "P(S=0)=1/n!", st.correct_probability,
                                Rational(BigInt(dist.counts.at(0)), factorial(n))));
    return checks;
}

std::vector<Check> verify_monte_carlo(std::uint32_t n, std::uint64_t samples, std::uint64_t seed,
                                      unsigned threads) {
    const auto st = score_stats(n, 0);
    const auto mc = monte_carlo_mae(n, samples, seed, threads);
    const double expected = to_double(st.expected_mae);
    const double tolerance = 3.0 * std::sqrt(to_double(st.variance_mae) / static_cast<double>(samples));
    const std::string tag = "n=" + std::to_string(n) + " ";

    std::vector<Check> checks;
    checks.push_back(Check{tag + "mean MAE within 3 sigma of E[MAE]",
                           to_decimal_string(st.expected_mae) + " +/- " +
                               to_decimal_string(Rational(tolerance), 6),
                           to_decimal_string(Rational(mc.mean), 9),
                           std::abs(mc.mean - expected) <= tolerance});
    checks.push_back(Check{tag + "samples within [0, max MAE]",
                           "[0, " + to_decimal_string(st.max_mae) + "]",
                           "[" + to_decimal_string(Rational(mc.min), 6) + ", " +
                               to_decimal_string(Rational(mc.max), 6) + "]",
                           mc.min >= 0.0 && Rational(mc.max) <= st.max_mae});
    return checks;
}

}  // namespace tablecast
