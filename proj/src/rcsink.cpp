#include "zeno/rcsink.hpp"

#include <cmath>
#include <complex>

namespace zeno {

void RCParams::validate() const {
    if (!(coupling > 0.0)) throw InvalidState("rc params: coupling V must be > 0");
    if (lambda_c < 0.0) throw InvalidState("rc params: lambda_c must be >= 0");
    bell.validate();
}

RCAmplitudes rc_amplitudes(double t, const RCParams& p) {
    p.validate();
    if (t < 0.0) throw InvalidState("rc_amplitudes: t must be >= 0");

    const double v = p.coupling;
    const double lc = p.lambda_c;
    const double damping = std::exp(-0.5 * lc * t);

    // 2 Omega = sqrt(4 V^2 - (lc/2)^2); imaginary when overdamped, in
    // which case the trigonometric forms continue to hyperbolic ones.
    const complexd omega = 0.5 * std::sqrt(complexd{4.0 * v * v - 0.25 * lc * lc, 0.0});

    complexd donor_factor, acceptor_factor;
    if (std::abs(omega) < 1e-8) {
        // critically damped: cos + (lc/4w) sin -> 1 + lc t / 4, (V/w) sin -> V t
        donor_factor = 1.0 + 0.25 * lc * t;
        acceptor_factor = v * t;
    } else {
        const complexd wt = omega * t;
        donor_factor = std::cos(wt) + (lc / 4.0) * std::sin(wt) / omega;
        acceptor_factor = v * std::sin(wt) / omega;
    }
    const double scale = std::max({1.0, std::abs(donor_factor), std::abs(acceptor_factor)});
    if (std::abs(donor_factor.imag()) > 1e-12 * scale ||
        std::abs(acceptor_factor.imag()) > 1e-12 * scale)
        throw NonPhysical("rc_amplitudes: non-real amplitude residue");

    RCAmplitudes r{};
    r.xi2 = damping * donor_factor.real() * donor_factor.real();
    r.eta2 = damping * acceptor_factor.real() * acceptor_factor.real();
    r.chi2 = 1.0 - r.xi2 - r.eta2;
    if (r.chi2 < -1e-10)
        throw NonPhysical("rc_amplitudes: reservoir population below zero");
    if (r.chi2 < 0.0) r.chi2 = 0.0;
    return r;
}

DensityMatrix tripartite_density(double t, const RCParams& p) {
    const RCAmplitudes amp = rc_amplitudes(t, p);
    const double a = p.bell.a, b = p.bell.b;
    const double xi2 = amp.xi2, eta2 = amp.eta2, chi2 = amp.chi2;
    const double xichi = std::sqrt(xi2 * chi2);  // non-negative branch

    // basis |d1 r1 r2>, index = 4 d1 + 2 r1 + r2
    ComplexMatrix m(8);
    m(0, 0) = (eta2 + xi2) * b * b + a * a * eta2;
    m(1, 1) = b * b * chi2;
    m(1, 2) = a * b * chi2;
    m(2, 1) = a * b * chi2;
    m(2, 2) = a * a * chi2;
    m(1, 4) = a * b * xichi;
    m(4, 1) = a * b * xichi;
    m(2, 4) = a * a * xichi;
    m(4, 2) = a * a * xichi;
    m(4, 4) = a * a * xi2;
    return DensityMatrix(std::move(m), "d1r1r2");
}

double rc_distance_measure(double t, double tau, const RCParams& p) {
    if (t < 0.0) throw InvalidState("rc_distance_measure: t must be >= 0");
    if (!(tau > 0.0)) throw InvalidState("rc_distance_measure: tau must be > 0");

    const DensityMatrix rho0 = tripartite_density(0.0, p);
    const DensityMatrix rho_tau = tripartite_density(tau, p);
    const double denom = trace_distance(rho0, rho_tau);
    if (denom < 1e-12)
        throw DegenerateDenominator("rc_distance_measure: D[rho(0), rho(tau)] below 1e-12");
    if (t == 0.0) return 0.0;

    const double num =
        trace_distance(tripartite_density(t, p), tripartite_density(t + tau, p)) - denom;
    return num / denom;
}

} // namespace zeno
