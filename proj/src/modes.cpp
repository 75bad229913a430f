#include "causalgame/modes.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>

namespace causalgame::modes {

namespace {

constexpr int kMaxHalvings = 40;

void check_valid(const GaussianMode& m, const char* who) {
    if (m.sigma <= 0.0) {
        throw InvalidMode(std::string(who) + ": sigma must be positive");
    }
}

std::optional<std::string> paraxial_warning(const GaussianMode& a,
                                            const GaussianMode& b) {
    if (!a.paraxial_ok() || !b.paraxial_ok()) {
        return "paraxial validity fails: k0/sigma < 10 for at least one mode";
    }
    return std::nullopt;
}

// Adaptive Simpson with interval halving. Throws QuadratureFailure when the
// tolerance cannot be met within the depth cap.
template <typename T>
T adaptive_simpson(const std::function<T(double)>& f, double a, double b,
                   T fa, T fm, T fb, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const T flm = f(lm);
    const T frm = f(rm);
    const T whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const T left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const T right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const T delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    if (depth >= kMaxHalvings) {
        throw QuadratureFailure("adaptive Simpson: tolerance not reached");
    }
    return adaptive_simpson(f, a, m, fa, flm, fm, 0.5 * tol, depth + 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, 0.5 * tol, depth + 1);
}

template <typename T>
T integrate(const std::function<T(double)>& f, double a, double b, double tol) {
    const double m = 0.5 * (a + b);
    return adaptive_simpson<T>(f, a, b, f(a), f(m), f(b), tol, 0);
}

}  // namespace

double delay_argument(const GaussianMode& sender, const GaussianMode& receiver) {
    return (receiver.t_center - sender.t_center) -
           (receiver.x_center - sender.x_center);
}

double transmission_probability_delay(double sigma_sender, double sigma_receiver,
                                      double delay) {
    if (sigma_sender <= 0.0 || sigma_receiver <= 0.0) {
        throw InvalidMode("transmission_probability: sigma must be positive");
    }
    const double s2 = sigma_sender * sigma_sender;
    const double r2 = sigma_receiver * sigma_receiver;
    const double prefactor = 2.0 * sigma_sender * sigma_receiver / (s2 + r2);
    const double exponent = -2.0 * delay * delay * s2 * r2 / (s2 + r2);
    return prefactor * std::exp(exponent);
}

OverlapResult transmission_probability(const GaussianMode& sender,
                                       const GaussianMode& receiver) {
    check_valid(sender, "sender");
    check_valid(receiver, "receiver");
    if (sender.k0 != receiver.k0) {
        throw MismatchedCarrier(
            "analytic transmission requires equal carrier wavenumbers");
    }
    OverlapResult out;
    out.method = OverlapMethod::Analytic;
    out.probability = transmission_probability_delay(
        sender.sigma, receiver.sigma, delay_argument(sender, receiver));
    out.warning = paraxial_warning(sender, receiver);
    return out;
}

OverlapResult overlap_probability_quadrature(const GaussianMode& sender,
                                             const GaussianMode& receiver,
                                             double tol) {
    check_valid(sender, "sender");
    check_valid(receiver, "receiver");
    if (tol <= 0.0) {
        throw InvalidMode("overlap_probability_quadrature: tol must be positive");
    }
    const double d = delay_argument(sender, receiver);
    const double smax = std::max(sender.sigma, receiver.sigma);
    const double lo = std::min(sender.k0, receiver.k0) - 12.0 * smax;
    const double hi = std::max(sender.k0, receiver.k0) + 12.0 * smax;

    // Spectral amplitudes g(k) = exp(-(k-k0)^2/(4 sigma^2)) / (2 pi sigma^2)^(1/4);
    // amplitude = integral dk g_r(k) g_s(k) exp(-i k d).
    const auto spectral = [](const GaussianMode& m, double k) {
        const double z = (k - m.k0) / (2.0 * m.sigma);
        return std::exp(-z * z) /
               std::pow(2.0 * M_PI * m.sigma * m.sigma, 0.25);
    };
    std::function<std::complex<double>(double)> f =
        [&](double k) -> std::complex<double> {
        return spectral(sender, k) * spectral(receiver, k) *
               std::exp(std::complex<double>(0.0, -k * d));
    };
    const std::complex<double> amp = integrate<std::complex<double>>(f, lo, hi, tol);
    OverlapResult out;
    out.method = OverlapMethod::Quadrature;
    out.probability = std::norm(amp);
    out.warning = paraxial_warning(sender, receiver);
    return out;
}

double energy_expectation(const GaussianMode& mode, double tol) {
    check_valid(mode, "mode");
    if (tol <= 0.0) {
        throw InvalidMode("energy_expectation: tol must be positive");
    }
    std::function<double(double)> f = [&](double k) {
        const double z = (k - mode.k0) / mode.sigma;
        return std::abs(k) * std::exp(-0.5 * z * z) / (2.0 * M_PI * mode.sigma);
    };
    const double lo = mode.k0 - 12.0 * mode.sigma;
    const double hi = mode.k0 + 12.0 * mode.sigma;
    if (lo < 0.0 && hi > 0.0) {
        // split at the |k| kink
        return integrate<double>(f, lo, 0.0, 0.5 * tol) +
               integrate<double>(f, 0.0, hi, 0.5 * tol);
    }
    return integrate<double>(f, lo, hi, tol);
}

}  // namespace causalgame::modes
