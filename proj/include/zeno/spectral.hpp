#ifndef ZENO_SPECTRAL_HPP
#define ZENO_SPECTRAL_HPP

#include <functional>

#include "zeno/errors.hpp"

namespace zeno {

/// Bath and qubit parameters of the low-frequency spectral density
/// J(omega) = 2*coupling*omega / (omega^2 + alpha^2). Energies are in
/// units of the qubit splitting delta_omega = 1. The tunneling amplitude
/// is carried for the unit convention but does not enter the decay rate
/// under the rotating-wave approximation.
struct SpectralParams {
    double coupling = 0.01;     // Lambda, dimensionless coupling strength
    double alpha = 0.25;        // characteristic bath frequency, 1/t_b
    double delta_omega = 1.0;   // qubit energy splitting (energy unit)
    double tunneling = 2.0;     // unused under RWA, kept for the unit convention

    void validate() const;
};

struct QuadratureOptions {
    double abs_tol = 1e-12;
    double rel_tol = 1e-9;
    double tail_tol = 1e-10;        // relative to gamma_0
    int max_subdivisions = 2000;

    void validate() const;
};

enum class ZenoRegime { Zeno, AntiZeno, Boundary };

struct ZenoClass {
    ZenoRegime regime;
    double ratio;  // gamma(tau) / gamma_0
};

/// Boundary band on the ratio: |ratio - 1| <= kBoundaryBand classifies as
/// Boundary.
inline constexpr double kZenoBoundaryBand = 1e-9;

/// Multiplicative frequency weight hook (the counter-rotating correction
/// slot); the default path is the identity weight.
using FrequencyWeight = std::function<double(double)>;

/// J(omega) = 2*Lambda*omega / (omega^2 + alpha^2); peaks at omega = alpha.
double spectral_density(double omega, const SpectralParams& p);

/// F_tau(omega - delta_omega) = (tau/2pi) * sinc^2((omega - delta_omega)*tau/2);
/// unit area in omega.
double modulating_function(double omega, double tau, const SpectralParams& p);

/// sinc(x) = sin(x)/x with the removable singularity handled by series.
double sinc(double x);

/// gamma(tau) = int_0^inf J(omega) F_tau(omega - delta_omega) d omega,
/// adaptive Gauss-Kronrod with sinc-node panel seeding and a certified
/// oscillatory tail treatment. Throws ToleranceNotMet when the
/// subdivision budget is exhausted.
double effective_decay_rate(double tau, const SpectralParams& p,
                            const QuadratureOptions& q = {});
double effective_decay_rate(double tau, const SpectralParams& p,
                            const QuadratureOptions& q,
                            const FrequencyWeight& weight);

/// gamma_0 = J(delta_omega), the tau -> infinity limit.
double natural_decay_rate(const SpectralParams& p);

ZenoClass classify_zeno(double tau, const SpectralParams& p,
                        const QuadratureOptions& q = {});
ZenoClass classify_zeno(double tau, const SpectralParams& p,
                        const QuadratureOptions& q, double boundary_band);

/// Analytic bound on int_{omega_cut}^inf J * F d omega, valid for
/// omega_cut > delta_omega.
double certified_tail_bound(double omega_cut, double tau, const SpectralParams& p);

/// Measurement interval at which gamma(tau) crosses gamma_0, by bisection
/// of gamma(tau) - gamma_0 on [tau_lo, tau_hi]. Requires a sign change.
double jump_time(const SpectralParams& p, const QuadratureOptions& q,
                 double tau_lo, double tau_hi, double tol = 1e-8);

} // namespace zeno

#endif
