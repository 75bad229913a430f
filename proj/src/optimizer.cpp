#include "causalgame/optimizer.hpp"

#include <cmath>

namespace causalgame::optimizer {

namespace {

constexpr int kCoarseGridPoints = 4096;

// Sum of the two transmission exponentials; p_succ = (2 + f)/4.
double objective(double dt, double sigma, double tau) {
    const double s2 = sigma * sigma;
    const double dm = dt - tau;
    const double dp = dt + tau;
    return std::exp(-dm * dm * s2) + std::exp(-dp * dp * s2);
}

double objective_deriv(double dt, double sigma, double tau) {
    const double s2 = sigma * sigma;
    const double dm = dt - tau;
    const double dp = dt + tau;
    return -2.0 * s2 *
           (dm * std::exp(-dm * dm * s2) + dp * std::exp(-dp * dp * s2));
}

Regime classify(double dt_star, double tau) {
    if (dt_star == 0.0) return Regime::C;
    if (dt_star >= 0.95 * tau) return Regime::A;
    return Regime::B;
}

}  // namespace

OptimumReport optimal_dt(double sigma, double tau) {
    if (sigma <= 0.0 || tau <= 0.0) {
        throw InvalidConfig("optimal_dt: sigma and tau must be positive");
    }
    OptimumReport report;

    // dt = 0 is always a stationary point; it stops being the maximum when
    // f''(0) turns positive, i.e. sigma*tau > 1/sqrt(2). Ties resolve to 0.
    // Compared in sigma*tau form so the boundary value itself lands on 0.
    const double st = sigma * tau;
    if (st <= OptimumReport::bifurcation_sigma_tau) {
        report.dt_star = 0.0;
    } else {
        // Coarse grid on [0, 2 tau], then bisection on f' in the bracketing
        // cell. f has at most two stationary points on the half-line.
        const double step = 2.0 * tau / kCoarseGridPoints;
        int best = 0;
        double best_f = objective(0.0, sigma, tau);
        for (int i = 1; i <= kCoarseGridPoints; ++i) {
            const double f = objective(i * step, sigma, tau);
            if (f > best_f) {
                best_f = f;
                best = i;
            }
        }
        double lo = best > 0 ? (best - 1) * step : 0.0;
        double hi = best < kCoarseGridPoints ? (best + 1) * step : 2.0 * tau;
        // Need f'(lo) > 0. The interior maximum exists, so halving toward 0
        // always finds a positive-slope point.
        while (lo > 0.0 && objective_deriv(lo, sigma, tau) <= 0.0) {
            hi = lo;
            lo *= 0.5;
        }
        if (lo == 0.0) {
            lo = hi;
            while (objective_deriv(lo, sigma, tau) <= 0.0) lo *= 0.5;
        }
        const double resolution = 1e-12 * tau;
        while (hi - lo > resolution) {
            const double mid = 0.5 * (lo + hi);
            if (objective_deriv(mid, sigma, tau) > 0.0) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        report.dt_star = 0.5 * (lo + hi);
    }
    report.p_succ_star = 0.25 * (2.0 + objective(report.dt_star, sigma, tau));
    report.regime = classify(report.dt_star, tau);
    return report;
}

ThresholdReport violation_threshold_sigma(double tau, double dt) {
    if (tau <= 0.0) {
        throw InvalidConfig("violation_threshold_sigma: tau must be positive");
    }
    const auto excess = [&](double sigma) {
        return 0.25 * (2.0 + objective(dt, sigma, tau)) - 0.75;
    };
    const double top = 20.0 / tau;
    ThresholdReport report;
    if (excess(top) >= 0.0) {
        report.sigma = top;
        report.always_violates = true;
        return report;
    }
    double lo = 1e-12 / tau;
    if (excess(lo) < 0.0) {
        throw NoViolation("p_succ < 3/4 over the whole sigma bracket");
    }
    double hi = top;
    while (hi - lo > 1e-10 * hi) {
        const double mid = 0.5 * (lo + hi);
        if (excess(mid) >= 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    report.sigma = lo;
    return report;
}

std::vector<SweepRow> sweep(const std::vector<double>& sigma_list, double tau,
                            const std::vector<double>& dt_grid) {
    if (sigma_list.empty() || dt_grid.empty()) {
        throw InvalidConfig("sweep: grids must be nonempty");
    }
    std::vector<SweepRow> rows;
    rows.reserve(sigma_list.size() * dt_grid.size());
    for (double sigma : sigma_list) {
        for (double dt : dt_grid) {
            game::GameConfig cfg;
            cfg.sigma_a = sigma;
            cfg.sigma_b = sigma;
            cfg.tau = tau;
            cfg.dt = dt;
            const game::SuccessStats s = game::success_probability(cfg);
            rows.push_back({sigma, sigma, tau, dt, s.p_transmit_ab,
                            s.p_transmit_ba, s.p_succ, s.violates_bound});
        }
    }
    return rows;
}

}  // namespace causalgame::optimizer
