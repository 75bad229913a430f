#pragma once

#include <cstdint>
#include <stdexcept>

// The two-party guessing game: analytic success probability and a seeded
// Monte Carlo simulation of the photon-exchange protocol.

namespace causalgame::game {

struct InvalidConfig : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct GameConfig {
    double sigma_a = 1.0;  // spectral width of Alice's mode
    double sigma_b = 1.0;  // spectral width of Bob's mode
    double tau = 1.0;      // effective propagation separation x_B - x_A
    double dt = 0.0;       // timing offset t_B - t_A
    double k0 = 0.0;       // shared carrier; 0 means "pick 100*max(sigma)"

    void validate() const {
        if (sigma_a <= 0.0 || sigma_b <= 0.0) {
            throw InvalidConfig("sigma_a and sigma_b must be positive");
        }
        if (tau <= 0.0) {
            throw InvalidConfig("tau must be positive");
        }
    }
};

struct SuccessStats {
    double p_transmit_ab = 0.0;       // Alice's photon through Bob's mirror
    double p_transmit_ba = 0.0;       // Bob's photon through Alice's mirror
    double p_bob_guesses_right = 0.0;
    double p_alice_guesses_right = 0.0;
    double p_succ = 0.0;
    bool violates_bound = false;
};

struct MonteCarloReport {
    std::uint64_t n_rounds = 0;
    double empirical_p_succ = 0.0;
    double standard_error = 0.0;
    double empirical_p_xb = 0.0;  // frequency of x == b (Alice's bit guessed)
    double empirical_p_ya = 0.0;  // frequency of y == a (Bob's bit guessed)
    std::uint64_t seed = 0;
};

// The causal inequality bound, 3/4.
double causal_bound();

// True when p_succ strictly exceeds the bound (it is non-strict).
bool violates_bound(double p_succ);

// Closed-form per-round statistics. Delay arguments are dt - tau for
// Alice -> Bob and -dt - tau for Bob -> Alice; each undelivered photon
// is replaced by a fair-coin guess.
SuccessStats success_probability(const GameConfig& config);

// Round-by-round simulation. Each round draws its randomness from a
// counter-derived substream of `seed`, so the report is deterministic for
// a fixed seed regardless of how rounds are sharded across threads.
// n_threads = 0 picks the hardware concurrency.
MonteCarloReport simulate_game(const GameConfig& config, std::uint64_t n_rounds,
                               std::uint64_t seed, unsigned n_threads = 0);

}  // namespace causalgame::game
