#ifndef ZENO_RCSINK_HPP
#define ZENO_RCSINK_HPP

#include "zeno/bipartite.hpp"
#include "zeno/linalg.hpp"

namespace zeno {

/// Donor-acceptor-sink parameters (hbar = 1, energies in units of the
/// donor-acceptor coupling).
struct RCParams {
    double coupling = 1.0;   // V, donor-acceptor coupling
    double lambda_c = 0.0;   // sink decay rate
    BellState bell{};        // pair superposition amplitudes (a, b)

    void validate() const;
};

/// Site populations of the evolved donor-acceptor-reservoir state.
struct RCAmplitudes {
    double xi2;   // donor
    double eta2;  // acceptor
    double chi2;  // collective reservoir excitation
};

/// Closed-form damped-Rabi populations. The overdamped regime
/// (lambda_c >= 4V) is evaluated by complex continuation of the Rabi
/// frequency; results are checked real.
RCAmplitudes rc_amplitudes(double t, const RCParams& p);

/// 8x8 density matrix of the donor(1)-sink(1)-sink(2) partition in basis
/// |d1 r1 r2>, index = 4 d1 + 2 r1 + r2.
DensityMatrix tripartite_density(double t, const RCParams& p);

/// Relative trace-distance difference
/// D(t,tau) = (D[rho(t), rho(t+tau)] - D[rho(0), rho(tau)]) / D[rho(0), rho(tau)].
/// Positive values flag non-Markovianity.
double rc_distance_measure(double t, double tau, const RCParams& p);

} // namespace zeno

#endif
