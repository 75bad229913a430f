#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "causalgame/fock.hpp"
#include "causalgame/modes.hpp"

using namespace causalgame::fock;

namespace {

const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

FockState two_mode(std::map<Occupation, Complex> amps) {
    return FockState({"m0", "m1"}, std::move(amps));
}

}  // namespace

TEST_CASE("state validation") {
    CHECK_THROWS_AS(two_mode({{{1, 0}, 0.5}}), InvalidState);  // not normalized
    CHECK_THROWS_AS(two_mode({{{1}, 1.0}}), InvalidState);     // wrong length
    CHECK_THROWS_AS(two_mode({{{2, 1}, 1.0}}), TruncationOverflow);
    CHECK_THROWS_AS(FockState::single_photon({"m0"}, "nope"), UnknownMode);
    const auto v = FockState::vacuum({"m0", "m1"});
    CHECK(v.probability({0, 0}) == 1.0);
}

TEST_CASE("beamsplitter: defining action on a single photon") {
    const auto in = FockState::single_photon({"m0", "m1"}, "m0");
    const auto out = apply_beamsplitter(in, "m0", "m1");
    CHECK(std::abs(out.amplitude({1, 0}) - inv_sqrt2) < 1e-12);
    CHECK(std::abs(out.amplitude({0, 1}) - inv_sqrt2) < 1e-12);
}

TEST_CASE("beamsplitter is self-inverse (matrix square oracle)") {
    // [[1,1],[1,-1]]/sqrt(2) squares to the identity, so two passes must
    // restore any state exactly.
    std::mt19937 gen(7);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        std::map<Occupation, Complex> amps = {
            {{0, 0}, {unif(gen), unif(gen)}}, {{1, 0}, {unif(gen), unif(gen)}},
            {{0, 1}, {unif(gen), unif(gen)}}, {{2, 0}, {unif(gen), unif(gen)}},
            {{1, 1}, {unif(gen), unif(gen)}}, {{0, 2}, {unif(gen), unif(gen)}}};
        double n = 0.0;
        for (auto& [occ, a] : amps) n += std::norm(a);
        for (auto& [occ, a] : amps) a /= std::sqrt(n);
        const auto in = two_mode(amps);
        const auto out = apply_beamsplitter(
            apply_beamsplitter(in, "m0", "m1"), "m0", "m1");
        for (const auto& [occ, a] : amps) {
            CHECK(std::abs(out.amplitude(occ) - a) < 1e-12);
        }
    }
}

TEST_CASE("beamsplitter: vacuum is untouched, norm and photon number kept") {
    const auto v = apply_beamsplitter(FockState::vacuum({"m0", "m1"}), "m0", "m1");
    CHECK(std::abs(v.amplitude({0, 0}) - 1.0) < 1e-15);

    const auto hom = apply_beamsplitter(two_mode({{{1, 1}, 1.0}}), "m0", "m1");
    CHECK(std::abs(hom.norm_squared() - 1.0) < 1e-12);
    CHECK(hom.total_photons_max() == 2);
    // Hong-Ou-Mandel: the (1,1) component cancels
    CHECK(std::abs(hom.amplitude({1, 1})) < 1e-12);
}

TEST_CASE("cross-Kerr phase") {
    const auto in = two_mode({{{1, 1}, 1.0}});
    const auto out = apply_cross_kerr(in, "m0", "m1", M_PI);
    CHECK(std::abs(out.amplitude({1, 1}) + 1.0) < 1e-12);

    const auto idle = apply_cross_kerr(two_mode({{{0, 1}, 1.0}}), "m0", "m1", M_PI);
    CHECK(std::abs(idle.amplitude({0, 1}) - 1.0) < 1e-15);

    const auto half = apply_cross_kerr(in, "m0", "m1", M_PI / 2.0);
    CHECK(std::abs(half.norm_squared() - 1.0) < 1e-15);
    CHECK(std::abs(half.amplitude({1, 1}) - Complex(0.0, 1.0)) < 1e-12);

    CHECK_THROWS_AS(apply_cross_kerr(in, "m0", "m0"), UnknownMode);
    CHECK_THROWS_AS(apply_cross_kerr(in, "m0", "zz"), UnknownMode);
}

TEST_CASE("partial trace of a Bell-correlated pair") {
    std::map<Occupation, Complex> amps = {{{1, 0}, inv_sqrt2}, {{0, 1}, inv_sqrt2}};
    const auto bell = two_mode(std::move(amps));
    const auto reduced = partial_trace(bell, {"m0"});
    REQUIRE(reduced.basis.size() == 2);
    for (std::size_t r = 0; r < 2; ++r) {
        CHECK(std::abs(reduced.rho[r][r] - 0.5) < 1e-12);
        CHECK(std::abs(reduced.rho[r][1 - r]) < 1e-12);
    }
}

TEST_CASE("mode-selective mirror edge cases") {
    const auto full = mode_selective_mirror(1.0, true);
    CHECK(std::abs(full.rho[1][1] - 1.0) < 1e-12);
    const auto none = mode_selective_mirror(0.0, true);
    CHECK(std::abs(none.rho[0][0] - 1.0) < 1e-12);
    const auto empty = mode_selective_mirror(0.6, false);
    CHECK(empty.rho[0][0] == 1.0);
    CHECK(empty.eta == 0.0);
    CHECK_THROWS_AS(mode_selective_mirror(-0.1, true), InvalidEta);
    CHECK_THROWS_AS(mode_selective_mirror(1.5, true), InvalidEta);
}

TEST_CASE("mirror full-unitary partial trace equals diag(1-eta, eta)") {
    std::mt19937 gen(12345);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        const double eta = unif(gen);
        const auto mixed = mode_selective_mirror(eta, true);
        CHECK(std::abs(mixed.rho[0][0] - (1.0 - eta)) < 1e-12);
        CHECK(std::abs(mixed.rho[1][1] - eta) < 1e-12);
        CHECK(std::abs(mixed.rho[0][1]) < 1e-12);
        CHECK(std::abs(mixed.rho[1][0]) < 1e-12);
        CHECK(std::abs(mixed.rho[0][0] + mixed.rho[1][1] - 1.0) < 1e-12);
        CHECK(mixed.eta == doctest::Approx(eta).epsilon(1e-12));
    }
}

TEST_CASE("transmission probability feeds the mirror as eta") {
    using namespace causalgame::modes;
    const GaussianMode sender{100.0, 1.0, 0.0, 0.0, Polarization::H};
    const GaussianMode receiver{100.0, 1.0, 0.0, 1.0, Polarization::H};
    const double eta = transmission_probability(sender, receiver).probability;
    const auto mixed = mode_selective_mirror(eta, true);
    // detection probability inside the lab equals the mode overlap
    CHECK(std::abs(mixed.rho[1][1] - eta) < 1e-12);
}

TEST_CASE("CNOT truth table on the computational basis") {
    for (int c = 0; c < 2; ++c) {
        for (int t = 0; t < 2; ++t) {
            DualRailQubit control{c == 0 ? 1.0 : 0.0, c == 1 ? 1.0 : 0.0};
            DualRailQubit target{t == 0 ? 1.0 : 0.0, t == 1 ? 1.0 : 0.0};
            const auto out = cnot_open_loop(control, target);
            const int t_out = (c == 1) ? 1 - t : t;
            Occupation expect = {c == 0, c == 1, t_out == 0, t_out == 1};
            CAPTURE(c);
            CAPTURE(t);
            CHECK(std::abs(out.probability(expect) - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("CNOT recorded per-basis phases") {
    // the pinned beamsplitter convention flips the target with a -1 phase
    const auto flipped = cnot_open_loop({0.0, 1.0}, {1.0, 0.0});
    CHECK(std::abs(flipped.amplitude({0, 1, 0, 1}) + 1.0) < 1e-12);
    const auto idle = cnot_open_loop({1.0, 0.0}, {1.0, 0.0});
    CHECK(std::abs(idle.amplitude({1, 0, 1, 0}) - 1.0) < 1e-12);
}

TEST_CASE("CNOT on a superposed control produces Bell correlations") {
    const auto out = cnot_open_loop({inv_sqrt2, inv_sqrt2}, {1.0, 0.0});
    CHECK(std::abs(out.probability({1, 0, 1, 0}) - 0.5) < 1e-12);
    CHECK(std::abs(out.probability({0, 1, 0, 1}) - 0.5) < 1e-12);
    CHECK(std::abs(out.probability({1, 0, 0, 1})) < 1e-12);
    CHECK(std::abs(out.probability({0, 1, 1, 0})) < 1e-12);
    CHECK(std::abs(out.norm_squared() - 1.0) < 1e-12);
}

TEST_CASE("zero-time feedback is the identity channel") {
    const auto [p1, q1] = cnot_feedback_zero_time({1.0, 0.0});
    CHECK(p1 == 1.0);
    CHECK(q1 == 0.0);
    const auto [p2, q2] = cnot_feedback_zero_time({0.0, 1.0});
    CHECK(p2 == 0.0);
    CHECK(q2 == 1.0);
    const auto [p3, q3] = cnot_feedback_zero_time({inv_sqrt2, inv_sqrt2});
    CHECK(p3 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(p3 + q3 == doctest::Approx(1.0).epsilon(1e-15));
    // amplitudes that are exactly normalized in binary conserve exactly
    const auto [p4, q4] = cnot_feedback_zero_time({0.6, 0.8});
    CHECK(p4 + q4 == 1.0);
    CHECK_THROWS_AS(cnot_feedback_zero_time({1.0, 1.0}), InvalidState);
}

TEST_CASE("unitarity of the gate set on random states") {
    std::mt19937 gen(99);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        std::map<Occupation, Complex> amps;
        for (int a = 0; a <= 2; ++a) {
            for (int b = 0; a + b <= 2; ++b) {
                amps[{a, b}] = Complex(unif(gen), unif(gen));
            }
        }
        double n = 0.0;
        for (auto& [occ, amp] : amps) n += std::norm(amp);
        for (auto& [occ, amp] : amps) amp /= std::sqrt(n);
        const auto in = two_mode(amps);
        const int photons_before = in.total_photons_max();

        const auto bs = apply_beamsplitter(in, "m0", "m1");
        CHECK(std::abs(bs.norm_squared() - 1.0) < 1e-12);
        CHECK(bs.total_photons_max() == photons_before);

        const auto kerr = apply_cross_kerr(in, "m0", "m1", 1.234);
        CHECK(std::abs(kerr.norm_squared() - 1.0) < 1e-12);
        CHECK(kerr.total_photons_max() == photons_before);
    }
}
