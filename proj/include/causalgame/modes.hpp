#pragma once

#include <optional>
#include <stdexcept>
#include <string>

// Gaussian wavepacket mode algebra: overlap/transmission probabilities
// between right-moving Gaussian-localised photon modes (units c = hbar = 1)
// and the single-photon energy expectation.

namespace causalgame::modes {

enum class Polarization { H, V };

struct GaussianMode {
    double k0 = 0.0;        // central wavenumber
    double sigma = 0.0;     // spectral width
    double t_center = 0.0;  // central time of the mode's trajectory
    double x_center = 0.0;  // central position
    Polarization polarization = Polarization::H;

    // True when k0/sigma >= 10, the regime where the right-moving
    // 1+1-D description is trustworthy.
    bool paraxial_ok() const { return k0 / sigma >= 10.0; }
    bool valid() const { return sigma > 0.0 && k0 > 0.0; }
};

enum class OverlapMethod { Analytic, Quadrature };

struct OverlapResult {
    double probability = 0.0;  // in [0, 1]
    OverlapMethod method = OverlapMethod::Analytic;
    std::optional<std::string> warning;  // set when paraxial validity fails
};

struct InvalidMode : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct MismatchedCarrier : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct QuadratureFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Delay argument between sender and receiver modes:
// (receiver time - sender time) - (receiver position - sender position).
// Zero when the receiver sits on the sender's light-like trajectory.
double delay_argument(const GaussianMode& sender, const GaussianMode& receiver);

// Transmission probability through a mode-selective mirror matched to
// `receiver`, for a photon prepared in `sender`, from the closed-form
// spectral overlap:
//   2 sigma_s sigma_r / (sigma_s^2 + sigma_r^2)
//     * exp(-2 d^2 sigma_s^2 sigma_r^2 / (sigma_s^2 + sigma_r^2))
// which reduces to exp(-d^2 sigma^2) for equal widths.
// Requires equal carriers; throws MismatchedCarrier otherwise.
OverlapResult transmission_probability(const GaussianMode& sender,
                                       const GaussianMode& receiver);

// Same closed form with the delay argument supplied directly.
double transmission_probability_delay(double sigma_sender, double sigma_receiver,
                                      double delay);

// |<0| a_recv a+_send |0>|^2 by adaptive quadrature of the spectral
// integral over k in [min(k0) - 12 max(sigma), max(k0) + 12 max(sigma)].
// Supports unequal carriers. Absolute error of the amplitude integral <= tol.
OverlapResult overlap_probability_quadrature(const GaussianMode& sender,
                                             const GaussianMode& receiver,
                                             double tol);

// <1,j|H|1,j> = integral dk/(2 pi sigma) |k| exp(-(k-k0)^2 / (2 sigma^2)),
// evaluated numerically. Finite for every finite sigma; ~ k0/sqrt(2 pi)
// when k0 >> sigma.
double energy_expectation(const GaussianMode& mode, double tol);

}  // namespace causalgame::modes
