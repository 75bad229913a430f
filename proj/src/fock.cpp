#include "causalgame/fock.hpp"

#include <algorithm>
#include <cmath>

namespace causalgame::fock {

namespace {

constexpr double kAmplitudeCutoff = 1e-15;
constexpr double kNormTolerance = 1e-12;

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

double binomial(int n, int k) {
    return factorial(n) / (factorial(k) * factorial(n - k));
}

int occupation_total(const Occupation& occ) {
    int total = 0;
    for (int n : occ) total += n;
    return total;
}

void accumulate(std::map<Occupation, Complex>& amps, const Occupation& occ,
                Complex value) {
    auto [it, inserted] = amps.emplace(occ, value);
    if (!inserted) it->second += value;
}

void drop_negligible(std::map<Occupation, Complex>& amps) {
    for (auto it = amps.begin(); it != amps.end();) {
        if (std::abs(it->second) < kAmplitudeCutoff) {
            it = amps.erase(it);
        } else {
            ++it;
        }
    }
}

}  // namespace

FockState::FockState(std::vector<std::string> mode_labels,
                     std::map<Occupation, Complex> amplitudes, int n_max)
    : mode_labels_(std::move(mode_labels)),
      amplitudes_(std::move(amplitudes)),
      n_max_(n_max) {
    if (mode_labels_.empty()) {
        throw InvalidState("FockState: mode list is empty");
    }
    double norm2 = 0.0;
    for (const auto& [occ, amp] : amplitudes_) {
        if (occ.size() != mode_labels_.size()) {
            throw InvalidState("FockState: occupation length != mode count");
        }
        for (int n : occ) {
            if (n < 0) throw InvalidState("FockState: negative occupation");
        }
        if (occupation_total(occ) > n_max_) {
            throw TruncationOverflow("FockState: total photons exceed n_max");
        }
        norm2 += std::norm(amp);
    }
    if (std::abs(norm2 - 1.0) > kNormTolerance) {
        throw InvalidState("FockState: state is not normalized");
    }
}

FockState FockState::vacuum(std::vector<std::string> mode_labels, int n_max) {
    Occupation zero(mode_labels.size(), 0);
    return FockState(std::move(mode_labels), {{zero, 1.0}}, n_max);
}

FockState FockState::single_photon(std::vector<std::string> mode_labels,
                                   const std::string& occupied_mode, int n_max) {
    Occupation occ(mode_labels.size(), 0);
    auto it = std::find(mode_labels.begin(), mode_labels.end(), occupied_mode);
    if (it == mode_labels.end()) {
        throw UnknownMode("single_photon: no mode named " + occupied_mode);
    }
    occ[static_cast<std::size_t>(it - mode_labels.begin())] = 1;
    return FockState(std::move(mode_labels), {{occ, 1.0}}, n_max);
}

std::size_t FockState::mode_index(const std::string& label) const {
    auto it = std::find(mode_labels_.begin(), mode_labels_.end(), label);
    if (it == mode_labels_.end()) {
        throw UnknownMode("no mode named " + label);
    }
    return static_cast<std::size_t>(it - mode_labels_.begin());
}

Complex FockState::amplitude(const Occupation& occ) const {
    auto it = amplitudes_.find(occ);
    return it == amplitudes_.end() ? Complex(0.0) : it->second;
}

double FockState::probability(const Occupation& occ) const {
    return std::norm(amplitude(occ));
}

double FockState::norm_squared() const {
    double n = 0.0;
    for (const auto& [occ, amp] : amplitudes_) n += std::norm(amp);
    return n;
}

int FockState::total_photons_max() const {
    int best = 0;
    for (const auto& [occ, amp] : amplitudes_) {
        best = std::max(best, occupation_total(occ));
    }
    return best;
}

FockState apply_beamsplitter(const FockState& state, const std::string& mode_i,
                             const std::string& mode_j) {
    const std::size_t i = state.mode_index(mode_i);
    const std::size_t j = state.mode_index(mode_j);
    if (i == j) throw UnknownMode("apply_beamsplitter: modes must be distinct");

    std::map<Occupation, Complex> out;
    for (const auto& [occ, amp] : state.amplitudes()) {
        const int p = occ[i];
        const int q = occ[j];
        // (a_i+)^p (a_j+)^q / sqrt(p! q!) expanded over the new operators.
        const double scale =
            std::pow(0.5, 0.5 * (p + q)) / std::sqrt(factorial(p) * factorial(q));
        for (int r = 0; r <= p; ++r) {
            for (int s = 0; s <= q; ++s) {
                const int ni = r + s;
                const int nj = p + q - ni;
                const double sign = (q - s) % 2 == 0 ? 1.0 : -1.0;
                const double coeff = scale * binomial(p, r) * binomial(q, s) *
                                     sign *
                                     std::sqrt(factorial(ni) * factorial(nj));
                Occupation target = occ;
                target[i] = ni;
                target[j] = nj;
                accumulate(out, target, amp * coeff);
            }
        }
    }
    drop_negligible(out);
    return FockState(state.mode_labels(), std::move(out), state.n_max());
}

FockState apply_cross_kerr(const FockState& state, const std::string& mode_i,
                           const std::string& mode_j, double phase) {
    const std::size_t i = state.mode_index(mode_i);
    const std::size_t j = state.mode_index(mode_j);
    if (i == j) throw UnknownMode("apply_cross_kerr: modes must be distinct");

    std::map<Occupation, Complex> out;
    for (const auto& [occ, amp] : state.amplitudes()) {
        const double angle = phase * occ[i] * occ[j];
        out.emplace(occ, amp * std::exp(Complex(0.0, angle)));
    }
    return FockState(state.mode_labels(), std::move(out), state.n_max());
}

FockState apply_mirror_swap(const FockState& state, const std::string& mode_a,
                            const std::string& mode_b) {
    const std::size_t a = state.mode_index(mode_a);
    const std::size_t b = state.mode_index(mode_b);
    if (a == b) throw UnknownMode("apply_mirror_swap: modes must be distinct");

    std::map<Occupation, Complex> out;
    for (const auto& [occ, amp] : state.amplitudes()) {
        Occupation target = occ;
        std::swap(target[a], target[b]);
        // each swapped photon picks up a factor i
        const int moved = occ[a] + occ[b];
        Complex phase(1.0);
        for (int m = 0; m < moved; ++m) phase *= Complex(0.0, 1.0);
        accumulate(out, target, amp * phase);
    }
    return FockState(state.mode_labels(), std::move(out), state.n_max());
}

ReducedDensity partial_trace(const FockState& state,
                             const std::vector<std::string>& kept_modes) {
    std::vector<std::size_t> kept;
    kept.reserve(kept_modes.size());
    for (const auto& label : kept_modes) kept.push_back(state.mode_index(label));

    std::vector<bool> is_kept(state.mode_labels().size(), false);
    for (std::size_t k : kept) is_kept[k] = true;

    // Group amplitudes by traced-out occupation; each group contributes a
    // rank-one term to the reduced density matrix.
    std::map<Occupation, std::map<Occupation, Complex>> groups;
    for (const auto& [occ, amp] : state.amplitudes()) {
        Occupation kept_occ(kept.size());
        for (std::size_t r = 0; r < kept.size(); ++r) kept_occ[r] = occ[kept[r]];
        Occupation traced;
        for (std::size_t m = 0; m < occ.size(); ++m) {
            if (!is_kept[m]) traced.push_back(occ[m]);
        }
        groups[traced][kept_occ] += amp;
    }

    std::map<Occupation, std::size_t> index;
    for (const auto& [traced, group] : groups) {
        for (const auto& [kept_occ, amp] : group) {
            index.emplace(kept_occ, index.size());
        }
    }

    ReducedDensity out;
    out.basis.resize(index.size());
    for (const auto& [occ, idx] : index) out.basis[idx] = occ;
    out.rho.assign(index.size(), std::vector<Complex>(index.size(), 0.0));
    for (const auto& [traced, group] : groups) {
        for (const auto& [occ_r, amp_r] : group) {
            for (const auto& [occ_c, amp_c] : group) {
                out.rho[index.at(occ_r)][index.at(occ_c)] +=
                    amp_r * std::conj(amp_c);
            }
        }
    }
    return out;
}

SingleModeMixedState mode_selective_mirror(double eta, bool input_has_photon) {
    if (eta < 0.0 || eta > 1.0) {
        throw InvalidEta("mode_selective_mirror: eta must lie in [0, 1]");
    }
    SingleModeMixedState result;
    if (!input_has_photon) {
        result.eta = 0.0;
        result.rho = {{{1.0, 0.0}, {0.0, 0.0}}};
        return result;
    }

    const std::vector<std::string> labels = {"a0", "a_perp", "b_perp"};
    std::map<Occupation, Complex> amps;
    if (eta > 0.0) amps[{1, 0, 0}] = std::sqrt(eta);
    if (eta < 1.0) amps[{0, 1, 0}] = std::sqrt(1.0 - eta);
    FockState incoming(labels, std::move(amps));

    const FockState after = apply_mirror_swap(incoming, "a_perp", "b_perp");
    const ReducedDensity reduced = partial_trace(after, {"a0"});

    result.rho = {{{0.0, 0.0}, {0.0, 0.0}}};
    for (std::size_t r = 0; r < reduced.basis.size(); ++r) {
        for (std::size_t c = 0; c < reduced.basis.size(); ++c) {
            const int nr = reduced.basis[r][0];
            const int nc = reduced.basis[c][0];
            if (nr <= 1 && nc <= 1) {
                result.rho[nr][nc] += reduced.rho[r][c].real();
            }
        }
    }
    result.eta = result.rho[1][1];
    return result;
}

void DualRailQubit::validate() const {
    const double n = std::norm(alpha) + std::norm(beta);
    if (std::abs(n - 1.0) > kNormTolerance) {
        throw InvalidState("DualRailQubit: |alpha|^2 + |beta|^2 != 1");
    }
}

FockState cnot_open_loop(const DualRailQubit& control, const DualRailQubit& target) {
    control.validate();
    target.validate();

    const std::vector<std::string> labels = {"c0", "c1", "t0", "t1"};
    std::map<Occupation, Complex> amps;
    const Complex coeffs[2][2] = {{control.alpha * target.alpha,
                                   control.alpha * target.beta},
                                  {control.beta * target.alpha,
                                   control.beta * target.beta}};
    for (int c = 0; c < 2; ++c) {
        for (int t = 0; t < 2; ++t) {
            if (std::abs(coeffs[c][t]) < kAmplitudeCutoff) continue;
            Occupation occ = {c == 0, c == 1, t == 0, t == 1};
            amps[occ] = coeffs[c][t];
        }
    }
    FockState state(labels, std::move(amps));

    state = apply_beamsplitter(state, "t0", "t1");
    state = apply_cross_kerr(state, "t0", "c1", M_PI);
    state = apply_beamsplitter(state, "t0", "t1");
    return state;
}

std::pair<double, double> cnot_feedback_zero_time(const DualRailQubit& qubit) {
    qubit.validate();
    return {std::norm(qubit.alpha), std::norm(qubit.beta)};
}

}  // namespace causalgame::fock
