#ifndef ZENO_BIPARTITE_HPP
#define ZENO_BIPARTITE_HPP

#include <map>
#include <mutex>
#include <tuple>

#include "zeno/linalg.hpp"
#include "zeno/spectral.hpp"

namespace zeno {

/// Real-amplitude superposition a|00> + b|11> of the two qubits.
struct BellState {
    double a = 0.70710678118654752;
    double b = 0.70710678118654752;

    void validate() const;
};

/// Repeated-measurement protocol: N projective measurements at a common
/// interval, with per-qubit bath parameters (identical by default).
struct MeasurementModel {
    int n_measurements = 20;
    SpectralParams spectral1{};
    SpectralParams spectral2{};

    void validate() const;
};

/// Amplitudes of the surviving / decayed branch after the full
/// N-measurement history: u = exp(-gamma(tau) N tau / 2), v = sqrt(1-u^2).
struct SurvivalAmplitudes {
    double u = 1.0;
    double v = 0.0;
};

enum class Partition { QubitQubit, ReservoirReservoir, QubitReservoir };

SurvivalAmplitudes survival_amplitudes(double tau, const SpectralParams& p,
                                       int n_measurements,
                                       const QuadratureOptions& q = {});
/// Same, with gamma(tau) already in hand (memoized sweeps).
SurvivalAmplitudes survival_amplitudes_from_rate(double tau, double gamma_tau,
                                                 int n_measurements);

/// Closed-form 4x4 X-structured reduced density matrix for the chosen
/// partition, basis (|00>,|01>,|10>,|11>). The qubit-reservoir corner
/// entry uses the normalization-preserving form a^2 + b^2 v1^2 u2^2;
/// `strict_paper_corner` switches to the printed a^2 + b^2 u1^2 v2^2
/// variant, which only traces to 1 when u1 = u2.
DensityMatrix reduced_density(Partition partition, const BellState& bell,
                              const SurvivalAmplitudes& s1, const SurvivalAmplitudes& s2,
                              bool strict_paper_corner = false);

/// Same entries without density-matrix validation (the strict-paper
/// variant deliberately violates unit trace).
ComplexMatrix reduced_density_entries(Partition partition, const BellState& bell,
                                      const SurvivalAmplitudes& s1,
                                      const SurvivalAmplitudes& s2,
                                      bool strict_paper_corner = false);

/// 16-dimensional four-factor pure state (q1, q2, r1, r2) with each
/// qubit-reservoir pair evolved into its surviving/decayed branches.
/// Partial traces of this state reproduce reduced_density for every
/// partition; the equivalence is the oracle test.
PureState full_state_oracle(const BellState& bell, const SurvivalAmplitudes& s1,
                            const SurvivalAmplitudes& s2);

/// Thread-safe memo for gamma(tau); idempotent insertion, safe under
/// concurrent lookup.
class DecayRateCache {
public:
    double operator()(double tau, const SpectralParams& p, const QuadratureOptions& q) const;

private:
    using Key = std::tuple<double, double, double, double, double, double, double, int>;
    mutable std::mutex mutex_;
    mutable std::map<Key, double> cache_;
};

/// Trace-distance difference Delta(tau1, tau2) =
/// D[rho(tau2), rho(tau1+tau2)] - D[rho(0), rho(tau1)], where rho(x) is
/// the reduced matrix after the N-measurement history at interval x.
/// Positive values flag non-Markovian backflow.
double delta_measure(double tau1, double tau2, Partition partition, const BellState& bell,
                     const MeasurementModel& m, const QuadratureOptions& q = {},
                     const DecayRateCache* cache = nullptr);

} // namespace zeno

#endif
