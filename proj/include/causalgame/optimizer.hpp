#pragma once

#include <stdexcept>
#include <vector>

#include "causalgame/game.hpp"

// Optimal timing offset, violation thresholds, and parameter sweeps for
// the equal-width game.

namespace causalgame::optimizer {

struct InvalidConfig : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NoViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Where the optimal |dt| sits relative to tau:
//   A: dt_star >= 0.95 tau (near light-like ordering either way)
//   B: 0 < dt_star < 0.95 tau
//   C: dt_star = 0 (symmetric case, sigma*tau <= 1/sqrt(2))
enum class Regime { A, B, C };

struct OptimumReport {
    double dt_star = 0.0;    // nonnegative representative of the +- pair
    double p_succ_star = 0.0;
    Regime regime = Regime::C;
    // sigma*tau value where dt_star = 0 stops being the maximum.
    static constexpr double bifurcation_sigma_tau = 0.7071067811865475244;
};

struct ThresholdReport {
    double sigma = 0.0;           // largest sigma with p_succ >= 3/4
    bool always_violates = false; // p_succ > 3/4 over the whole bracket
};

struct SweepRow {
    double sigma_a, sigma_b, tau, dt;
    double p_ab, p_ba, p_succ;
    bool violates;
};

// Maximizes exp(-(dt-tau)^2 sigma^2) + exp(-(dt+tau)^2 sigma^2) over
// dt in [0, 2 tau] (the objective is even in dt) by a 4096-point coarse
// grid plus derivative bisection to |dt| resolution 1e-12 * tau.
// Returns dt_star = 0 exactly when sigma*tau <= 1/sqrt(2).
OptimumReport optimal_dt(double sigma, double tau);

// Largest sigma in (0, 20/tau] with p_succ(sigma, tau, dt) >= 3/4, by
// bisection to relative tolerance 1e-10. When the whole bracket violates
// (e.g. dt = tau), returns the bracket top with always_violates set.
ThresholdReport violation_threshold_sigma(double tau, double dt);

// Equal-width sweep in row-major order (sigma outer, dt inner).
std::vector<SweepRow> sweep(const std::vector<double>& sigma_list, double tau,
                            const std::vector<double>& dt_grid);

}  // namespace causalgame::optimizer
