#include "zeno/pipelines.hpp"

namespace zeno {

HeatmapGrid zeno_ratio_map(const AxisSpec& tau_axis, const AxisSpec& alpha_axis,
                           const SpectralParams& p, const QuadratureOptions& q, int workers) {
    GridSpec spec{tau_axis, alpha_axis,
                  {{"coupling", p.coupling}, {"delta_omega", p.delta_omega}}};
    auto kernel = [p, q](double tau, double alpha) {
        SpectralParams local = p;
        local.alpha = alpha;
        return effective_decay_rate(tau, local, q) / natural_decay_rate(local) - 1.0;
    };
    return run_sweep(spec, kernel, workers);
}

SignMap zeno_phase_map(const AxisSpec& tau_axis, const AxisSpec& alpha_axis,
                       const SpectralParams& p, const QuadratureOptions& q, int workers) {
    return to_sign_map(zeno_ratio_map(tau_axis, alpha_axis, p, q, workers), kZenoBoundaryBand);
}

HeatmapGrid nonmarkov_delta_map(const AxisSpec& tau1_axis, const AxisSpec& tau2_axis,
                                Partition partition, const BellState& bell,
                                const MeasurementModel& m, const QuadratureOptions& q,
                                int workers) {
    GridSpec spec{tau1_axis, tau2_axis,
                  {{"coupling", m.spectral1.coupling},
                   {"alpha", m.spectral1.alpha},
                   {"delta_omega", m.spectral1.delta_omega},
                   {"a", bell.a},
                   {"b", bell.b},
                   {"n_measurements", static_cast<double>(m.n_measurements)}}};
    DecayRateCache cache;  // grid rows/columns share tau values
    auto kernel = [partition, bell, m, q, &cache](double tau1, double tau2) {
        return delta_measure(tau1, tau2, partition, bell, m, q, &cache);
    };
    return run_sweep(spec, kernel, workers);
}

SignMap nonmarkov_sign_map(const AxisSpec& tau1_axis, const AxisSpec& tau2_axis,
                           Partition partition, const BellState& bell,
                           const MeasurementModel& m, const QuadratureOptions& q, int workers) {
    return to_sign_map(nonmarkov_delta_map(tau1_axis, tau2_axis, partition, bell, m, q, workers),
                       kSignZeroBand);
}

HeatmapGrid rc_map(const AxisSpec& t_axis, const AxisSpec& lambda_axis, double tau,
                   const RCParams& p, int workers) {
    if (!(tau > 0.0)) throw InvalidGrid("rc_map: tau must be > 0");
    GridSpec spec{t_axis, lambda_axis,
                  {{"coupling", p.coupling}, {"tau", tau}, {"a", p.bell.a}, {"b", p.bell.b}}};
    auto kernel = [p, tau](double t, double lambda_c) {
        RCParams local = p;
        local.lambda_c = lambda_c;
        return rc_distance_measure(t, tau, local);
    };
    return run_sweep(spec, kernel, workers);
}

std::vector<int> positive_count_per_column(const SignMap& map) {
    std::vector<int> counts(map.spec.x.count, 0);
    for (int ix = 0; ix < map.spec.x.count; ++ix)
        for (int iy = 0; iy < map.spec.y.count; ++iy)
            if (map.at(ix, iy) > 0) ++counts[ix];
    return counts;
}

std::vector<int> positive_count_per_row(const SignMap& map) {
    std::vector<int> counts(map.spec.y.count, 0);
    for (int iy = 0; iy < map.spec.y.count; ++iy)
        for (int ix = 0; ix < map.spec.x.count; ++ix)
            if (map.at(ix, iy) > 0) ++counts[iy];
    return counts;
}

} // namespace zeno
