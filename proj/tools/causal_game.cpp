// Command-line front end: closed-form success probabilities, timing
// optimization, violation thresholds, sweeps, Monte Carlo runs, and the
// Fock-space self-checks. Emits figure-ready CSV or JSON.

#include <charconv>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "causalgame/fock.hpp"
#include "causalgame/game.hpp"
#include "causalgame/modes.hpp"
#include "causalgame/optimizer.hpp"

namespace {

using causalgame::game::GameConfig;
using causalgame::game::MonteCarloReport;
using causalgame::game::SuccessStats;
using causalgame::optimizer::OptimumReport;
using causalgame::optimizer::Regime;
using causalgame::optimizer::SweepRow;
using causalgame::optimizer::ThresholdReport;

// Shortest decimal representation that round-trips to the same double.
std::string fmt(double value) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

std::string fmt9(double value) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.9g", value);
    return buf;
}

unsigned env_thread_cap() {
    const char* raw = std::getenv("CAUSAL_GAME_THREADS");
    if (raw == nullptr) return 0;
    return static_cast<unsigned>(std::strtoul(raw, nullptr, 10));
}

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::A: return "A";
        case Regime::B: return "B";
        default: return "C";
    }
}

void print_stats(const SuccessStats& s) {
    std::cout << "p_transmit_ab = " << fmt9(s.p_transmit_ab) << "\n"
              << "p_transmit_ba = " << fmt9(s.p_transmit_ba) << "\n"
              << "p_bob_guesses_right = " << fmt9(s.p_bob_guesses_right) << "\n"
              << "p_alice_guesses_right = " << fmt9(s.p_alice_guesses_right) << "\n"
              << "p_succ = " << fmt9(s.p_succ) << "\n"
              << "violates_bound = " << (s.violates_bound ? "true" : "false")
              << "\n";
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "sigma_a,sigma_b,tau,dt,p_ab,p_ba,p_succ,violates\n";
    for (const auto& r : rows) {
        out << fmt(r.sigma_a) << ',' << fmt(r.sigma_b) << ',' << fmt(r.tau)
            << ',' << fmt(r.dt) << ',' << fmt(r.p_ab) << ',' << fmt(r.p_ba)
            << ',' << fmt(r.p_succ) << ',' << (r.violates ? 1 : 0) << "\n";
    }
}

void write_sweep_json(std::ostream& out, const std::vector<SweepRow>& rows) {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& r : rows) {
        doc.push_back({{"sigma_a", r.sigma_a},
                       {"sigma_b", r.sigma_b},
                       {"tau", r.tau},
                       {"dt", r.dt},
                       {"p_ab", r.p_ab},
                       {"p_ba", r.p_ba},
                       {"p_succ", r.p_succ},
                       {"violates", r.violates}});
    }
    out << doc.dump(2) << "\n";
}

int run_fock_demo() {
    namespace fock = causalgame::fock;
    bool all_ok = true;
    const auto report = [&](const char* name, bool ok) {
        std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
        all_ok = all_ok && ok;
    };

    {
        bool ok = true;
        for (double eta : {0.0, 0.25, 0.6, 1.0}) {
            const auto mixed = fock::mode_selective_mirror(eta, true);
            ok = ok && std::abs(mixed.rho[0][0] - (1.0 - eta)) < 1e-12 &&
                 std::abs(mixed.rho[1][1] - eta) < 1e-12 &&
                 std::abs(mixed.rho[0][1]) < 1e-12;
        }
        report("mode-selective mirror reduced state = diag(1-eta, eta)", ok);
    }
    {
        bool ok = true;
        for (int c = 0; c < 2; ++c) {
            for (int t = 0; t < 2; ++t) {
                fock::DualRailQubit control{c == 0 ? 1.0 : 0.0, c == 1 ? 1.0 : 0.0};
                fock::DualRailQubit target{t == 0 ? 1.0 : 0.0, t == 1 ? 1.0 : 0.0};
                const auto out = fock::cnot_open_loop(control, target);
                const int t_out = c == 1 ? 1 - t : t;
                fock::Occupation expect = {c == 0, c == 1, t_out == 0, t_out == 1};
                ok = ok && std::abs(out.probability(expect) - 1.0) < 1e-12;
            }
        }
        report("cross-Kerr CNOT truth table", ok);
    }
    {
        const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        fock::DualRailQubit plus{inv_sqrt2, inv_sqrt2};
        const auto [p_plus, p_minus] = fock::cnot_feedback_zero_time(plus);
        report("zero-time feedback is the identity channel",
               std::abs(p_plus - 0.5) < 1e-12 && std::abs(p_minus - 0.5) < 1e-12 &&
                   std::abs(p_plus + p_minus - 1.0) < 1e-15);
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Causal-inequality game with Gaussian-localised photon modes"};
    app.require_subcommand(1);
    app.set_config("--config", "",
                   "flat key = value config file; sweep keys go under a "
                   "[sweep] section; flags take precedence");

    // shared game flags
    double sigma_a = 1.0, sigma_b = 1.0, tau = 1.0, dt = 0.0, k0 = 0.0;
    const auto add_game_flags = [&](CLI::App* cmd, bool need_sigmas) {
        auto* sa = cmd->add_option("--sigma-a", sigma_a, "Alice's spectral width");
        auto* sb = cmd->add_option("--sigma-b", sigma_b, "Bob's spectral width");
        if (need_sigmas) {
            sa->required();
            sb->required();
        }
        cmd->add_option("--tau", tau, "separation x_B - x_A")->required();
        cmd->add_option("--dt", dt, "timing offset t_B - t_A");
        cmd->add_option("--k0", k0,
                        "carrier wavenumber (default 100*max(sigma))");
    };
    const auto make_config = [&]() {
        GameConfig cfg;
        cfg.sigma_a = sigma_a;
        cfg.sigma_b = sigma_b;
        cfg.tau = tau;
        cfg.dt = dt;
        cfg.k0 = k0 > 0.0 ? k0 : 100.0 * std::max(sigma_a, sigma_b);
        return cfg;
    };

    auto* psucc = app.add_subcommand("psucc", "closed-form success probability");
    add_game_flags(psucc, true);

    auto* optimize = app.add_subcommand("optimize", "optimal timing offset");
    double opt_sigma = 1.0;
    optimize->add_option("--sigma", opt_sigma, "spectral width")->required();
    optimize->add_option("--tau", tau, "separation x_B - x_A")->required();

    auto* threshold = app.add_subcommand("threshold", "largest violating sigma");
    threshold->add_option("--tau", tau, "separation x_B - x_A")->required();
    threshold->add_option("--dt", dt, "timing offset t_B - t_A");

    auto* sweep_cmd = app.add_subcommand("sweep", "equal-width parameter sweep");
    std::vector<double> sigma_list;
    std::vector<double> dt_grid;
    std::string out_path;
    std::string format = "csv";
    sweep_cmd->add_option("--sigma", sigma_list, "sigma grid")->required();
    sweep_cmd->add_option("--tau", tau, "separation x_B - x_A")->required();
    sweep_cmd->add_option("--dt", dt_grid, "dt grid")->required();
    sweep_cmd->add_option("-o,--output", out_path, "output file (default stdout)");
    sweep_cmd->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* montecarlo = app.add_subcommand("montecarlo", "seeded protocol simulation");
    std::uint64_t n_rounds = 1000000;
    std::uint64_t seed = 1;
    add_game_flags(montecarlo, true);
    montecarlo->add_option("--rounds", n_rounds, "number of rounds")
        ->check(CLI::PositiveNumber);
    montecarlo->add_option("--seed", seed, "RNG seed");

    app.add_subcommand("fock-demo", "mirror and CNOT self-checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            return app.exit(e);
        }
        app.exit(e);
        return 2;
    }

    try {
        if (psucc->parsed()) {
            print_stats(causalgame::game::success_probability(make_config()));
        } else if (optimize->parsed()) {
            const OptimumReport r = causalgame::optimizer::optimal_dt(opt_sigma, tau);
            std::cout << "dt_star = " << fmt(r.dt_star) << "\n"
                      << "p_succ_star = " << fmt(r.p_succ_star) << "\n"
                      << "regime = " << regime_name(r.regime) << "\n";
        } else if (threshold->parsed()) {
            const ThresholdReport r =
                causalgame::optimizer::violation_threshold_sigma(tau, dt);
            std::cout << "sigma_threshold = " << fmt(r.sigma) << "\n";
            if (r.always_violates) {
                std::cout << "always_violates = true\n";
            }
        } else if (sweep_cmd->parsed()) {
            const auto rows = causalgame::optimizer::sweep(sigma_list, tau, dt_grid);
            std::ofstream file;
            std::ostream* out = &std::cout;
            if (!out_path.empty()) {
                file.open(out_path);
                if (!file) {
                    std::cerr << "cannot open " << out_path << "\n";
                    return 1;
                }
                out = &file;
            }
            if (format == "json") {
                write_sweep_json(*out, rows);
            } else {
                write_sweep_csv(*out, rows);
            }
        } else if (montecarlo->parsed()) {
            const MonteCarloReport r = causalgame::game::simulate_game(
                make_config(), n_rounds, seed, env_thread_cap());
            std::cout << "n_rounds = " << r.n_rounds << "\n"
                      << "seed = " << r.seed << "\n"
                      << "empirical_p_succ = " << fmt(r.empirical_p_succ) << "\n"
                      << "standard_error = " << fmt(r.standard_error) << "\n"
                      << "empirical_p_xb = " << fmt(r.empirical_p_xb) << "\n"
                      << "empirical_p_ya = " << fmt(r.empirical_p_ya) << "\n";
        } else {
            return run_fock_demo();
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
