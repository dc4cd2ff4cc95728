#include "zeno/bipartite.hpp"

#include <cmath>

namespace zeno {

void BellState::validate() const {
    if (std::abs(a * a + b * b - 1.0) > 1e-12)
        throw InvalidState("bell state: a^2 + b^2 must equal 1 within 1e-12");
}

void MeasurementModel::validate() const {
    if (n_measurements < 1) throw InvalidState("measurement model: N must be >= 1");
    spectral1.validate();
    spectral2.validate();
}

SurvivalAmplitudes survival_amplitudes_from_rate(double tau, double gamma_tau,
                                                 int n_measurements) {
    if (tau < 0.0) throw InvalidState("survival_amplitudes: tau must be >= 0");
    if (n_measurements < 1) throw InvalidState("survival_amplitudes: N must be >= 1");
    if (tau == 0.0) return {1.0, 0.0};  // Zeno limit, gamma(0+) -> 0
    const double u = std::exp(-0.5 * gamma_tau * n_measurements * tau);
    return {u, std::sqrt(std::max(0.0, 1.0 - u * u))};
}

SurvivalAmplitudes survival_amplitudes(double tau, const SpectralParams& p, int n_measurements,
                                       const QuadratureOptions& q) {
    if (tau < 0.0) throw InvalidState("survival_amplitudes: tau must be >= 0");
    if (n_measurements < 1) throw InvalidState("survival_amplitudes: N must be >= 1");
    if (tau == 0.0) return {1.0, 0.0};
    return survival_amplitudes_from_rate(tau, effective_decay_rate(tau, p, q), n_measurements);
}

ComplexMatrix reduced_density_entries(Partition partition, const BellState& bell,
                                      const SurvivalAmplitudes& s1,
                                      const SurvivalAmplitudes& s2,
                                      bool strict_paper_corner) {
    bell.validate();
    const double a = bell.a, b = bell.b;
    const double u1 = s1.u, v1 = s1.v, u2 = s2.u, v2 = s2.v;
    const double b2 = b * b;

    double f1, f2, f3, f4, f5;
    switch (partition) {
        case Partition::QubitQubit:
            f1 = a * a + b2 * v1 * v1 * v2 * v2;
            f2 = b2 * v1 * v1 * u2 * u2;
            f3 = b2 * u1 * u1 * v2 * v2;
            f4 = b2 * u1 * u1 * u2 * u2;
            f5 = a * b * u1 * u2;
            break;
        case Partition::ReservoirReservoir:
            f1 = a * a + b2 * u1 * u1 * u2 * u2;
            f2 = b2 * u1 * u1 * v2 * v2;
            f3 = b2 * v1 * v1 * u2 * u2;
            f4 = b2 * v1 * v1 * v2 * v2;
            f5 = a * b * v1 * v2;
            break;
        case Partition::QubitReservoir:
            f1 = strict_paper_corner ? a * a + b2 * u1 * u1 * v2 * v2
                                     : a * a + b2 * v1 * v1 * u2 * u2;
            f2 = b2 * v1 * v1 * v2 * v2;
            f3 = b2 * u1 * u1 * u2 * u2;
            f4 = b2 * u1 * u1 * v2 * v2;
            f5 = a * b * u1 * v2;
            break;
    }

    ComplexMatrix m(4);
    m(0, 0) = f1;
    m(1, 1) = f2;
    m(2, 2) = f3;
    m(3, 3) = f4;
    m(0, 3) = f5;
    m(3, 0) = f5;
    return m;
}

namespace {
const char* partition_label(Partition p) {
    switch (p) {
        case Partition::QubitQubit: return "q1q2";
        case Partition::ReservoirReservoir: return "r1r2";
        case Partition::QubitReservoir: return "q1r2";
    }
    return "";
}
} // namespace

DensityMatrix reduced_density(Partition partition, const BellState& bell,
                              const SurvivalAmplitudes& s1, const SurvivalAmplitudes& s2,
                              bool strict_paper_corner) {
    return DensityMatrix(
        reduced_density_entries(partition, bell, s1, s2, strict_paper_corner),
        partition_label(partition));
}

PureState full_state_oracle(const BellState& bell, const SurvivalAmplitudes& s1,
                            const SurvivalAmplitudes& s2) {
    bell.validate();
    // factor order (q1, q2, r1, r2), subsystem 0 most significant:
    // index = 8 q1 + 4 q2 + 2 r1 + r2
    std::vector<complexd> amp(16, complexd{});
    amp[0] = bell.a;                     // |0000>
    amp[12] = bell.b * s1.u * s2.u;      // |1100>
    amp[9] = bell.b * s1.u * s2.v;       // |1001>
    amp[6] = bell.b * s1.v * s2.u;       // |0110>
    amp[3] = bell.b * s1.v * s2.v;       // |0011>
    return PureState(std::move(amp));
}

double DecayRateCache::operator()(double tau, const SpectralParams& p,
                                  const QuadratureOptions& q) const {
    const Key key{tau,       p.coupling, p.alpha,          p.delta_omega,
                  q.abs_tol, q.rel_tol,  q.tail_tol,       q.max_subdivisions};
    {
        std::lock_guard lock(mutex_);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    const double gamma = effective_decay_rate(tau, p, q);
    std::lock_guard lock(mutex_);
    cache_.emplace(key, gamma);  // duplicate computation is idempotent
    return gamma;
}

double delta_measure(double tau1, double tau2, Partition partition, const BellState& bell,
                     const MeasurementModel& m, const QuadratureOptions& q,
                     const DecayRateCache* cache) {
    if (tau1 < 0.0 || tau2 < 0.0)
        throw InvalidState("delta_measure: intervals must be >= 0");
    m.validate();

    auto amplitudes = [&](double tau, const SpectralParams& p) {
        if (tau == 0.0) return SurvivalAmplitudes{1.0, 0.0};
        const double gamma = cache ? (*cache)(tau, p, q) : effective_decay_rate(tau, p, q);
        return survival_amplitudes_from_rate(tau, gamma, m.n_measurements);
    };
    auto state = [&](double tau) {
        return reduced_density(partition, bell, amplitudes(tau, m.spectral1),
                               amplitudes(tau, m.spectral2));
    };

    const double d_final = trace_distance(state(tau2), state(tau1 + tau2));
    const double d_initial = trace_distance(state(0.0), state(tau1));
    return d_final - d_initial;
}

} // namespace zeno
