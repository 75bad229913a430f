#include "causalgame/game.hpp"

#include <cmath>
#include <thread>
#include <vector>

#include "causalgame/modes.hpp"

namespace causalgame::game {

namespace {

// splitmix64; each round gets its own stream keyed by (seed, round index).
struct RoundRng {
    std::uint64_t state;

    RoundRng(std::uint64_t seed, std::uint64_t round)
        : state(seed ^ (round * 0x9e3779b97f4a7c15ULL + 0xbf58476d1ce4e5b9ULL)) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    bool next_bit() { return (next_u64() >> 63) != 0; }

    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }
};

struct Tally {
    std::uint64_t xb = 0;  // rounds where Bob's output b matched Alice's input x
    std::uint64_t ya = 0;  // rounds where Alice's output a matched Bob's input y
};

Tally run_rounds(const SuccessStats& stats, std::uint64_t seed,
                 std::uint64_t begin, std::uint64_t end) {
    Tally t;
    for (std::uint64_t r = begin; r < end; ++r) {
        RoundRng rng(seed, r);
        const bool x = rng.next_bit();  // Alice's input bit
        const bool y = rng.next_bit();  // Bob's input bit
        // Alice's photon (carrying x) reaches Bob's detector, or Bob coins.
        const bool b = rng.next_unit() < stats.p_transmit_ab ? x : rng.next_bit();
        const bool a = rng.next_unit() < stats.p_transmit_ba ? y : rng.next_bit();
        if (x == b) ++t.xb;
        if (y == a) ++t.ya;
    }
    return t;
}

}  // namespace

double causal_bound() { return 0.75; }

bool violates_bound(double p_succ) { return p_succ > causal_bound(); }

SuccessStats success_probability(const GameConfig& config) {
    config.validate();
    SuccessStats s;
    s.p_transmit_ab = modes::transmission_probability_delay(
        config.sigma_a, config.sigma_b, config.dt - config.tau);
    s.p_transmit_ba = modes::transmission_probability_delay(
        config.sigma_b, config.sigma_a, -config.dt - config.tau);
    s.p_bob_guesses_right = s.p_transmit_ab + 0.5 * (1.0 - s.p_transmit_ab);
    s.p_alice_guesses_right = s.p_transmit_ba + 0.5 * (1.0 - s.p_transmit_ba);
    s.p_succ = 0.5 * (s.p_bob_guesses_right + s.p_alice_guesses_right);
    s.violates_bound = violates_bound(s.p_succ);
    return s;
}

MonteCarloReport simulate_game(const GameConfig& config, std::uint64_t n_rounds,
                               std::uint64_t seed, unsigned n_threads) {
    config.validate();
    if (n_rounds < 1) {
        throw InvalidConfig("n_rounds must be >= 1");
    }
    const SuccessStats stats = success_probability(config);

    if (n_threads == 0) {
        n_threads = std::max(1u, std::thread::hardware_concurrency());
    }
    n_threads = static_cast<unsigned>(
        std::min<std::uint64_t>(n_threads, n_rounds));

    std::vector<Tally> tallies(n_threads);
    if (n_threads == 1) {
        tallies[0] = run_rounds(stats, seed, 0, n_rounds);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(n_threads);
        const std::uint64_t chunk = n_rounds / n_threads;
        for (unsigned w = 0; w < n_threads; ++w) {
            const std::uint64_t begin = w * chunk;
            const std::uint64_t end = (w + 1 == n_threads) ? n_rounds : begin + chunk;
            workers.emplace_back([&, w, begin, end] {
                tallies[w] = run_rounds(stats, seed, begin, end);
            });
        }
        for (auto& w : workers) w.join();
    }

    Tally total;
    for (const auto& t : tallies) {
        total.xb += t.xb;
        total.ya += t.ya;
    }

    MonteCarloReport report;
    report.n_rounds = n_rounds;
    report.seed = seed;
    const double n = static_cast<double>(n_rounds);
    report.empirical_p_xb = static_cast<double>(total.xb) / n;
    report.empirical_p_ya = static_cast<double>(total.ya) / n;
    report.empirical_p_succ = 0.5 * (report.empirical_p_xb + report.empirical_p_ya);
    const double p = report.empirical_p_succ;
    report.standard_error = std::sqrt(p * (1.0 - p) / n);
    return report;
}

}  // namespace causalgame::game
