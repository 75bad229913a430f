#pragma once

#include <array>
#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Truncated few-photon Fock-space engine: beamsplitters, cross-Kerr phases,
// the mode-selective mirror reduced state, and the dual-rail Kerr CNOT with
// its zero-time feedback result.

namespace causalgame::fock {

using Complex = std::complex<double>;
using Occupation = std::vector<int>;  // one photon count per mode

struct UnknownMode : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct TruncationOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidState : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InvalidEta : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Normalized pure state over an ordered finite mode list, truncated at
// n_max total photons. Immutable after construction; operations return
// new states.
class FockState {
  public:
    FockState(std::vector<std::string> mode_labels,
              std::map<Occupation, Complex> amplitudes, int n_max = 2);

    static FockState vacuum(std::vector<std::string> mode_labels, int n_max = 2);
    static FockState single_photon(std::vector<std::string> mode_labels,
                                   const std::string& occupied_mode,
                                   int n_max = 2);

    const std::vector<std::string>& mode_labels() const { return mode_labels_; }
    const std::map<Occupation, Complex>& amplitudes() const { return amplitudes_; }
    int n_max() const { return n_max_; }

    std::size_t mode_index(const std::string& label) const;
    Complex amplitude(const Occupation& occ) const;
    double probability(const Occupation& occ) const;
    double norm_squared() const;
    int total_photons_max() const;  // largest occupied total

  private:
    std::vector<std::string> mode_labels_;
    std::map<Occupation, Complex> amplitudes_;
    int n_max_;
};

// 50:50 beamsplitter on creation operators:
//   a_i+ -> (a_i+ + a_j+)/sqrt(2),  a_j+ -> (a_i+ - a_j+)/sqrt(2).
// Self-inverse; preserves norm and total photon number.
FockState apply_beamsplitter(const FockState& state, const std::string& mode_i,
                             const std::string& mode_j);

// Multiplies each amplitude by exp(i * phase * n_i * n_j).
FockState apply_cross_kerr(const FockState& state, const std::string& mode_i,
                           const std::string& mode_j, double phase = M_PI);

// Mirror reflection of the orthogonal mode: a_perp+ -> i b_perp+ and
// b_perp+ -> i a_perp+ (the i != 0 factor of the mirror unitary).
FockState apply_mirror_swap(const FockState& state, const std::string& mode_a,
                            const std::string& mode_b);

// Reduced density matrix over `kept_modes` (in the given order), tracing
// out everything else. basis[r] is the kept-mode occupation of row r.
struct ReducedDensity {
    std::vector<Occupation> basis;
    std::vector<std::vector<Complex>> rho;
};
ReducedDensity partial_trace(const FockState& state,
                             const std::vector<std::string>& kept_modes);

// Diagonal density operator over {vacuum, one photon} in the lab mode.
struct SingleModeMixedState {
    double eta = 0.0;                          // one-photon weight
    std::array<std::array<double, 2>, 2> rho;  // diag(1 - eta, eta)
};

// Full mirror model: builds the 3-mode single-photon state
// sqrt(eta)|photon in a0> + sqrt(1-eta)|photon in a_perp>, applies the
// mirror swap on the orthogonal modes, and partial-traces the reflected
// side. Returns vacuum when no photon arrives.
SingleModeMixedState mode_selective_mirror(double eta, bool input_has_photon);

// One photon across two rails.
struct DualRailQubit {
    Complex alpha;  // amplitude on rail 0
    Complex beta;   // amplitude on rail 1

    void validate() const;
};

// Dual-rail CNOT from a pi cross-Kerr between the control's rail-1 mode
// and one beamsplitter output of the target rails. Output modes are
// ordered {c0, c1, t0, t1}; the truth table holds up to per-basis phases
// (|1c,0t> -> -|1c,1t>, |1c,1t> -> -|1c,0t>) fixed by the beamsplitter
// convention above.
FockState cnot_open_loop(const DualRailQubit& control, const DualRailQubit& target);

// Closed-form zero-time feedback of the Kerr CNOT: detection probabilities
// at the two output ports, (|alpha|^2, |beta|^2). The loop acts as the
// identity channel, so no fixed-point iteration is involved.
std::pair<double, double> cnot_feedback_zero_time(const DualRailQubit& qubit);

}  // namespace causalgame::fock
